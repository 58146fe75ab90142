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
# Run configuration: INI file, then command line, then checks.  Plus the
# pair-gluing plan file.
#---------------------------------------------------------------------------

import configparser
import os

import graph_core
from extender import CensusSpec
from pair_gluer import DEFAULT_BUCKET_SPILL


class ConfigError(Exception):

    def __init__(self, msg, lineno=None):
        super().__init__(msg)
        self.msg = msg
        self.lineno = lineno

    def __str__(self):
        if self.lineno is None:
            return self.msg
        return 'line %d: %s' % (self.lineno, self.msg)


class ConfigObject(object):
    '''Takes a dict and/or a set of kwargs, create an object.'''

    def __init__(self, asdict=None, **kwargs):
        if asdict is not None:
            self.__dict__.update(asdict)
        self.__dict__.update(kwargs)

    def __str__(self):
        s = []
        for k in sorted(self.__dict__.keys()):
            v = self.__dict__[k]
            if isinstance(v, (list, tuple, dict)):
                s.append('%s[len=%d]' % (k, len(v)))
            elif isinstance(v, str):
                s.append("%s='%s'" % (k, v))
            else:
                s.append('%s=%s' % (k, v))
        return '; '.join(s)

    def __repr__(self):
        return str(self)

    def __getitem__(self, key):
        return getattr(self, key)

    def get(self, key, default=None):
        return self.__dict__.get(key, default)

    @property
    def dict(self):
        return self.__dict__


def multiplier(instr, section='global'):
    '''Integer with an optional K/M/G/T (binary) suffix.  Return or
       raise.'''
    instr = str(instr).strip()
    try:
        return int(instr)
    except ValueError:
        pass
    base, suffix = instr[:-1], instr[-1:].upper()
    if suffix not in ('K', 'M', 'G', 'T'):
        raise ConfigError('Illegal multiplier "%s" in [%s]' % (instr, section))
    try:
        rsize = int(base)
    except ValueError:
        raise ConfigError('"%s" is not an integer' % base)
    return rsize * 1024 ** ('KMGT'.index(suffix) + 1)

###########################################################################
# INI files: one [global] section, options from a fixed list.

_LEGAL = frozenset((
    'workers',
    'memory_cap',
    't',
    's',
    'n',
    'max_edges',
    'd_min',
    'd_max',
    'min_degree',
    'degree',
    'plan',
    'in',
    'out',
    'shard',
    'verbose',
    'logfile',
    'table_order_max',
    'bucket_spill',
))

_REQUIRED = frozenset()

_SIZES = frozenset(('memory_cap', 'bucket_spill'))
_INTS = frozenset(('workers', 't', 's', 'n', 'max_edges', 'd_min', 'd_max',
                   'min_degree', 'degree', 'verbose', 'table_order_max'))


def load_config(inifile):
    '''{option: converted value} from the [global] section.'''
    config = configparser.ConfigParser()
    try:
        found = config.read(os.path.expanduser(inifile))
    except configparser.Error as e:
        raise ConfigError('%s: %s' % (inifile, str(e)))
    if not found or not config.sections():
        raise ConfigError('Missing/invalid/empty config file "%s"' % inifile)

    Gname = 'global'
    if not config.has_section(Gname):
        raise ConfigError('Missing [%s] section in config file: %s' % (
            Gname, inifile))
    others = [s for s in config.sections() if s != Gname]
    if others:
        raise ConfigError('Unknown section(s) in %s: %s' % (
            inifile, ', '.join(others)))

    G = config[Gname]
    options = frozenset(G.keys())
    bad = options - _LEGAL
    if not _REQUIRED.issubset(options):
        raise ConfigError(
            'Missing option(s) in [%s]: %s\nRequired options are %s' % (
                Gname, ', '.join(sorted(_REQUIRED - options)),
                ', '.join(sorted(_REQUIRED))))
    if bad:
        raise ConfigError(
            'Illegal option(s) in [%s]: %s\nLegal options are %s' % (
                Gname, ', '.join(sorted(bad)), ', '.join(sorted(_LEGAL))))

    values = {}
    for opt in options:
        raw = G[opt]
        if opt in _SIZES:
            values[opt] = multiplier(raw, Gname)
        elif opt in _INTS:
            try:
                values[opt] = int(raw)
            except ValueError:
                raise ConfigError('[%s] %s: "%s" is not an integer' % (
                    Gname, opt, raw))
        else:
            values[opt] = raw.strip()
    return values


def parse_shard(text):
    '''"I/K" -> (I, K) with 0 <= I < K.'''
    try:
        index, count = (int(x) for x in text.split('/'))
    except ValueError:
        raise ConfigError('shard "%s" is not I/K' % text)
    if count < 1 or not 0 <= index < count:
        raise ConfigError('shard %d/%d out of range' % (index, count))
    return index, count


class RunConfig(ConfigObject):
    '''Everything a subcommand needs.  Command line beats INI file beats
       these defaults.'''

    _defaults = {
        'workers':          1,
        'memory_cap':       None,       # census_io picks from free RAM
        't':                None,
        's':                3,
        'n':                None,
        'max_edges':        None,
        'd_min':            None,
        'd_max':            None,
        'min_degree':       None,
        'degree':           None,
        'plan':             None,
        'in':               None,
        'out':              None,
        'shard':            None,
        'verbose':          0,
        'logfile':          '',
        'table_order_max':  graph_core.TABLE_ORDER_MAX,
        'bucket_spill':     DEFAULT_BUCKET_SPILL,
    }

    # argparse dest for options whose INI name is a keyword
    _dest = {'in': 'infile'}

    @classmethod
    def from_args(cls, parseargs):
        ini = {}
        inifile = getattr(parseargs, 'config', None)
        if inifile:
            ini = load_config(inifile)
        values = {}
        for opt, default in cls._defaults.items():
            cli = getattr(parseargs, cls._dest.get(opt, opt), None)
            if cli is not None:
                if opt in _SIZES:
                    cli = multiplier(cli, 'command line')
                values[opt] = cli
            else:
                values[opt] = ini.get(opt, default)
        values['command'] = getattr(parseargs, 'command', None)
        values['config'] = inifile
        values['extend_check'] = getattr(parseargs, 'extend_check', None)
        values['min_degree_pruning'] = not getattr(
            parseargs, 'no_min_degree_pruning', False)
        config = cls(values)
        config.check()
        return config

    @property
    def infile(self):
        return self.dict['in']

    def check(self):
        if self.workers < 1:
            raise ConfigError('workers must be >= 1, got %d' % self.workers)
        if isinstance(self.shard, str):
            self.shard = parse_shard(self.shard)
        if self.s != 3 and self.command not in (None, 'verify',
                                                'census-stats', 'canon'):
            raise ConfigError('only s = 3 can be generated')
        for opt in ('t', 'n', 'max_edges', 'd_min', 'd_max', 'min_degree',
                    'degree', 'table_order_max', 'bucket_spill'):
            value = getattr(self, opt)
            if value is not None and value < 0:
                raise ConfigError('%s must not be negative' % opt)
        if self.memory_cap is not None and self.memory_cap <= 0:
            raise ConfigError('memory_cap must be positive')
        if self.d_min is not None and self.d_max is not None and \
                self.d_min > self.d_max:
            raise ConfigError('d_min %d above d_max %d' % (
                self.d_min, self.d_max))
        graph_core.TABLE_ORDER_MAX = self.table_order_max

    def spec(self, n=None, max_edges=None):
        '''The CensusSpec the options describe.'''
        if self.t is None:
            raise ConfigError('--t is required')
        return CensusSpec(self.s, self.t, self.n if n is None else n,
                          self.max_edges if max_edges is None else max_edges)

###########################################################################
# Plan files.  One directive per line, '#' starts a comment:
#
#   target 3,5,13 degree 4
#   core 3,3,3
#   core 3,3,4 exclude 3,3,3
#   core 3,3,5 exclude 3,3,3;3,3,4


class PlanLine(ConfigObject):
    pass


class Plan(ConfigObject):

    def __init__(self, path, target=None, degree=None, lines=None):
        super().__init__(path=path, target=target, degree=degree,
                         lines=lines or [])


def _parse_spec(text, lineno):
    try:
        return CensusSpec.parse(text)
    except ValueError as e:
        raise ConfigError(str(e), lineno)


def parse_plan(path, stream=None):
    '''Plan from a file, or from stream (any iterable of lines) when
       given.'''
    if stream is None:
        try:
            with open(path) as f:
                return parse_plan(path, f.readlines())
        except OSError as e:
            raise ConfigError('cannot read plan %s: %s' % (path, e.strerror))

    plan = Plan(path)
    for lineno, line in enumerate(stream, 1):
        words = line.split('#', 1)[0].split()
        if not words:
            continue
        directive = words[0]
        if directive == 'target':
            if plan.target is not None:
                raise ConfigError('second target directive', lineno)
            if len(words) not in (2, 4) or (len(words) == 4 and
                                            words[2] != 'degree'):
                raise ConfigError('expected "target <spec> [degree <d>]"',
                                  lineno)
            plan.target = _parse_spec(words[1], lineno)
            if len(words) == 4:
                try:
                    plan.degree = int(words[3])
                except ValueError:
                    raise ConfigError('degree "%s" is not an integer' %
                                      words[3], lineno)
        elif directive == 'core':
            if len(words) < 2:
                raise ConfigError('core directive without a class', lineno)
            core = _parse_spec(words[1], lineno)
            excludes = []
            rest = words[2:]
            if rest:
                if rest[0] != 'exclude' or len(rest) < 2:
                    raise ConfigError('expected "exclude <spec>..." after '
                                      'the core class', lineno)
                for chunk in rest[1:]:
                    excludes.extend(_parse_spec(text, lineno)
                                    for text in chunk.split(';') if text)
            plan.lines.append(PlanLine(lineno=lineno, core=core,
                                       excludes=excludes))
        else:
            raise ConfigError('unknown directive "%s"' % directive, lineno)
    if not plan.lines:
        raise ConfigError('plan %s has no core lines' % path)
    return plan
