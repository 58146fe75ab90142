#!/usr/bin/python3 -tt

# Copyright 2026 The ramsey-census authors

# This program is free software: you can redistribute it and/or modify
# it under the terms of the GNU General Public License, version 2 as
# published by the Free Software Foundation.

# This program is distributed in the hope that it will be useful,
# but WITHOUT ANY WARRANTY; without even the implied warranty of
# MERCHANTABILITY or FITNESS FOR A PARTICULAR PURPOSE.  See the
# GNU General Public License for more details.

# You should have received a copy of the GNU General Public License along
# with this program.  If not, write to the Free Software Foundation, Inc.,
# 59 Temple Place, Suite 330, Boston, MA 02111-1307 USA

#---------------------------------------------------------------------------
# graph6 codec.  Size header, then the upper triangle x(0,1), x(0,2),
# x(1,2), x(0,3)... packed big-endian six bits per byte, each byte + 63.
#---------------------------------------------------------------------------

from graph_core import Graph, MAX_ORDER

HEADER = b'>>graph6<<'

_BIAS = 63
_LONG = 126     # '~' starts the 18-bit size form


class Graph6Error(ValueError):
    '''Base of every decode problem.  lineno is filled in by whoever
       knows it (iter_graph6 does).'''

    def __init__(self, msg, lineno=None):
        super().__init__(msg)
        self.msg = msg
        self.lineno = lineno

    def __str__(self):
        if self.lineno is None:
            return self.msg
        return 'line %d: %s' % (self.lineno, self.msg)


class Graph6HeaderError(Graph6Error):
    pass


class Graph6TruncatedError(Graph6Error):
    pass


class Graph6PaddingError(Graph6Error):
    pass


class Graph6CharacterError(Graph6Error):
    pass

###########################################################################


def _size_header(n):
    if n <= 62:
        return bytes((n + _BIAS, ))
    return bytes((_LONG,
                  (n >> 12 & 0x3f) + _BIAS,
                  (n >> 6 & 0x3f) + _BIAS,
                  (n & 0x3f) + _BIAS))


def encode(g):
    '''Graph -> graph6 bytes, no newline.'''
    n = g.order
    if n > MAX_ORDER:
        raise ValueError('order %d is not supported' % n)
    value = 0
    nbits = 0
    adj = g.adj
    for j in range(1, n):
        for i in range(j):
            value = value << 1 | (adj[i] >> j & 1)
        nbits += j
    pad = -nbits % 6
    value <<= pad
    nbytes = (nbits + pad) // 6
    body = bytes(((value >> (6 * (nbytes - 1 - k))) & 0x3f) + _BIAS
                 for k in range(nbytes))
    return _size_header(n) + body


def decode(line, lineno=None):
    '''graph6 bytes (or str) -> Graph.  Surrounding whitespace and an
       optional >>graph6<< header are accepted.'''
    if isinstance(line, str):
        try:
            line = line.encode('ascii')
        except UnicodeEncodeError as e:
            raise Graph6CharacterError(
                'character %r at offset %d is not ASCII' % (
                    line[e.start], e.start), lineno)
    data = line.strip()
    if data.startswith(HEADER):
        data = data[len(HEADER):]
    if not data:
        raise Graph6HeaderError('empty graph6 line', lineno)
    for pos, c in enumerate(data):
        if not _BIAS <= c <= 126:
            raise Graph6CharacterError(
                'byte 0x%02x at offset %d is outside 63..126' % (c, pos),
                lineno)

    if data[0] != _LONG:
        n = data[0] - _BIAS
        body = data[1:]
    else:
        if len(data) > 1 and data[1] == _LONG:
            raise Graph6HeaderError('order too large for this tool', lineno)
        if len(data) < 4:
            raise Graph6HeaderError('short 4-byte size header', lineno)
        n = ((data[1] - _BIAS) << 12 | (data[2] - _BIAS) << 6 |
             (data[3] - _BIAS))
        if n <= 62:
            raise Graph6HeaderError(
                'long size header used for order %d' % n, lineno)
        body = data[4:]
    if n > MAX_ORDER:
        raise Graph6HeaderError('order %d exceeds %d' % (n, MAX_ORDER),
                                lineno)

    nbits = n * (n - 1) // 2
    expected = (nbits + 5) // 6
    if len(body) != expected:
        raise Graph6TruncatedError(
            'bit section has %d bytes, order %d needs %d' % (
                len(body), n, expected), lineno)

    value = 0
    for c in body:
        value = value << 6 | (c - _BIAS)
    pad = 6 * expected - nbits
    if value & ((1 << pad) - 1):
        raise Graph6PaddingError('nonzero padding bits', lineno)
    value >>= pad

    adj = [0] * n
    k = nbits
    for j in range(1, n):
        for i in range(j):
            k -= 1
            if value >> k & 1:
                adj[i] |= 1 << j
                adj[j] |= 1 << i
    return Graph(n, adj, check=False)


def iter_graph6(stream, first_lineno=1):
    '''Yield (lineno, Graph) from an iterable of lines, skipping blank
       lines.  Decode errors carry the line number.'''
    for lineno, line in enumerate(stream, first_lineno):
        if not line.strip():
            continue
        try:
            yield lineno, decode(line)
        except Graph6Error as e:
            e.lineno = lineno
            raise
