"""Code-subword / type-token alignment.

Each word of a corpus sample is BPE-encoded; its type token id is repeated
once per emitted subword, so the code and type id sequences always have the
same length. Aligned samples can be chunked to a block size and stored in a
compact binary dataset file.
"""
from __future__ import annotations

import json
import struct
from dataclasses import dataclass
from pathlib import Path

from .bpe import Encoder, Vocab
from .corpus import Sample
from .errors import AlignmentError, CorpusFormatError

_MAGIC = b"TCDATA1\n"


@dataclass
class AlignedSample:
    code_ids: list[int]
    type_ids: list[int]
    boundaries: list[tuple[int, int]]  # subword span per original word


def align(sample: Sample, vocab: Vocab, encoder: Encoder | None = None,
          ) -> AlignedSample:
    """Equal-length parallel id sequences for one sample.

    Every type token must be a registered special; the word's single type id
    is repeated once per subword the word encodes to."""
    enc = encoder if encoder is not None else Encoder(vocab)
    code_ids: list[int] = []
    type_ids: list[int] = []
    boundaries: list[tuple[int, int]] = []
    for word, ttok in zip(sample.code_tokens, sample.type_tokens):
        if ttok not in vocab.specials:
            raise AlignmentError("type token %r is not a vocab special" % ttok)
        ids = enc(word)
        if not ids:
            raise AlignmentError("word %r encoded to zero subwords" % word)
        start = len(code_ids)
        code_ids.extend(ids)
        type_ids.extend([vocab.id_of[ttok]] * len(ids))
        boundaries.append((start, start + len(ids)))
    return AlignedSample(code_ids, type_ids, boundaries)


def chunk(aligned: AlignedSample, block_size: int) -> list[AlignedSample]:
    """Split an over-long sample into consecutive non-overlapping windows.

    Sentinel context is not re-added: only the original first/last windows
    keep their sentinels. Word spans straddling a window edge are split."""
    n = len(aligned.code_ids)
    if n <= block_size:
        return [aligned]
    out = []
    for lo in range(0, n, block_size):
        hi = min(lo + block_size, n)
        bounds = []
        for start, end in aligned.boundaries:
            s, e = max(start, lo), min(end, hi)
            if s < e:
                bounds.append((s - lo, e - lo))
        out.append(AlignedSample(aligned.code_ids[lo:hi],
                                 aligned.type_ids[lo:hi], bounds))
    return out


def write_dataset(samples: list[AlignedSample], vocab_hash: str,
                  path: Path) -> None:
    """Length-prefixed (code_ids, type_ids) records, little-endian u32 ids."""
    header = json.dumps({"vocab_hash": vocab_hash,
                         "records": len(samples)}).encode("utf-8")
    with open(path, "wb") as fh:
        fh.write(_MAGIC)
        fh.write(struct.pack("<I", len(header)))
        fh.write(header)
        for sample in samples:
            n = len(sample.code_ids)
            fh.write(struct.pack("<I", n))
            fh.write(struct.pack("<%dI" % n, *sample.code_ids))
            fh.write(struct.pack("<%dI" % n, *sample.type_ids))


def read_dataset(path: Path, expected_hash: str | None = None,
                 ) -> list[tuple[list[int], list[int]]]:
    data = path.read_bytes()
    if data[:len(_MAGIC)] != _MAGIC:
        raise CorpusFormatError("%s: bad dataset magic" % path)
    off = len(_MAGIC)
    (hlen,) = struct.unpack_from("<I", data, off)
    off += 4
    header = json.loads(data[off:off + hlen].decode("utf-8"))
    off += hlen
    if expected_hash is not None and header["vocab_hash"] != expected_hash:
        raise CorpusFormatError(
            "%s: vocab hash mismatch (dataset %s… vs expected %s…)"
            % (path, header["vocab_hash"][:12], expected_hash[:12]))
    records = []
    for _ in range(header["records"]):
        (n,) = struct.unpack_from("<I", data, off)
        off += 4
        code = list(struct.unpack_from("<%dI" % n, data, off))
        off += 4 * n
        types = list(struct.unpack_from("<%dI" % n, data, off))
        off += 4 * n
        records.append((code, types))
    if off != len(data):
        raise CorpusFormatError("%s: trailing bytes after last record" % path)
    return records
