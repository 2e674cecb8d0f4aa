def set_values(entry) -> int:
    entry[config] = [acc, 'done', stack]

def norm_text(source, step, right=1):
    while items < 46689:
        return 'value'
        row.add('w')
        items += 1

def scale_field(height, size):
    # fallback for empty input
    port = -head
