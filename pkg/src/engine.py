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
# Census command engine
#---------------------------------------------------------------------------

import logging
import os
import sys
import traceback
from collections import Counter
from functools import partial

import graph6

from census_io import (
    CensusFile,
    census_stats,
    counts_table,
    dedup_stream,
    read_graph6_file,
    verify_file,
    write_census,
    write_manifest,
)
from canon import canonical_form
from cmdproto import RamseyCommandProtocol
from extender import (
    CensusSpec,
    KNOWN_R3,
    build_census,
    census,
    dual_neighbourhood_targets,
    forget_and_extend,
    one_point_extensions,
)
from gluer import GluingProblem, glue
from pair_gluer import PairGlueProblem, pair_glue
from run_config import ConfigError, parse_plan
from runlog import PerfMeter
from workers import WorkerPool, shard

EXIT_OK = 0
EXIT_VIOLATION = 1
EXIT_USAGE = 2
EXIT_IO = 3
EXIT_INTERNAL = 4

_COMPLETE_BY_DELETION = (
    'every graph of %s has a vertex of minimum degree; deleting it lands '
    'in the complete seed class %s')


def _glue_forms(core, tbound, degrees, max_edges, min_degree):
    '''Worker side of cmd_glue.'''
    forms = []
    for d in degrees:
        problem = GluingProblem(core, d, tbound, max_edges, min_degree)
        forms.extend(glue(problem))
    return forms


class RamseyCommandEngine(object):

    @staticmethod
    def argparse_extend(parser):
        '''Flags every subcommand takes.  Defaults stay None so RunConfig
           can tell an explicit flag from an INI value.'''
        parser.add_argument('--config', help='INI file with a [global] '
                            'section of defaults')
        parser.add_argument('--in', dest='infile',
                            help='input graph6 file')
        parser.add_argument('--out', help='output graph6 file')
        for name, text in (
                ('t', 'forbidden independent set size'),
                ('s', 'forbidden clique size (3 for generation)'),
                ('n', 'order'),
                ('max-edges', 'edge bound e <= max_edges'),
                ('d-min', 'smallest apex degree to glue'),
                ('d-max', 'largest apex degree to glue'),
                ('min-degree', 'assumed minimum degree of the target'),
                ('degree', 'regular degree for pair gluing'),
                ('workers', 'worker processes'),
                ('verbose', 'level of runtime output (0=ERROR, 1=PERF, '
                            '2=INFO, 3=INFO++, 4=DEBUG)'),
                ('table-order-max', 'largest order with a flat '
                                    'independence table')):
            parser.add_argument('--' + name, type=int, help=text)
        parser.add_argument('--shard', help='I/K: run contiguous slice I '
                            'of K of the input')
        parser.add_argument('--plan', help='pair-gluing plan file')
        parser.add_argument('--memory-cap', help='dedup memory, K/M/G/T '
                            'suffixes allowed')
        parser.add_argument('--bucket-spill', help='extensions kept in '
                            'memory before buckets move to SQLite')
        parser.add_argument('--logfile', help='log here instead of stderr')
        parser.add_argument('--extend-check', action='store_true',
                            default=None,
                            help='verify: also check nothing one-point '
                                 'extends')
        parser.add_argument('--no-min-degree-pruning', action='store_true',
                            help='census: keep every extension, not just '
                                 'minimum-degree ones')

    def __init__(self, config, out=None):
        self.config = config
        self.out = sys.stdout if out is None else out
        self.proto = RamseyCommandProtocol()

        # Create method lookup table by stripping the 'cmd_' prefix
        self.__class__._commands = dict(
            [(name[4:].replace('_', '-'), func)
             for (name, func) in self.__class__.__dict__.items() if
             name.startswith('cmd_')])

    @property
    def commandset(self):
        return tuple(sorted(self._commands.keys()))

    def _print(self, text):
        print(text, file=self.out)

    def _inputs(self, cmdict):
        '''Input graphs, sharded when asked.'''
        graphs = read_graph6_file(cmdict['in'])
        if self.config.shard is not None:
            index, count = self.config.shard
            graphs = shard(graphs, index, count)
            logging.warning('shard %d/%d: %d graphs', index, count,
                            len(graphs))
        return graphs

    def _finish(self, cmdict, results, spec, seed_spec=None,
                completeness='', schedule=''):
        counts = write_census(cmdict['out'], results)
        write_manifest(CensusFile(cmdict['out'], spec, counts,
                                  seed_spec=seed_spec,
                                  completeness=completeness,
                                  schedule=schedule))
        self._print(counts_table(counts))
        return EXIT_OK

    def _output_spec(self, results, max_edges=None):
        orders = set(g.order for g in results.values())
        n = orders.pop() if len(orders) == 1 else self.config.n
        return CensusSpec(3, self.config.t, n, max_edges)

    def cmd_extend(self, cmdict):
        '''Every one-point extension of every input graph.'''
        graphs = self._inputs(cmdict)
        config = self.config
        spec = CensusSpec(3, config.t, None, config.max_edges)
        with WorkerPool(config.workers) as pool:
            results = census(spec, graphs, min_degree_pruning=False,
                             mapper=pool.map)
        return self._finish(cmdict, results,
                            self._output_spec(results, config.max_edges))

    def _degrees(self, core, tbound):
        config = self.config
        if config.n is not None:
            d = config.n - 1 - core.order
            return [d] if 0 <= d <= tbound else []
        low = 0 if config.d_min is None else config.d_min
        if config.min_degree is not None:
            low = max(low, config.min_degree)
        high = tbound if config.d_max is None else min(config.d_max, tbound)
        # Outputs have order core.order + 1 + d < R(3,tbound+1).
        if tbound + 1 in KNOWN_R3:
            high = min(high, KNOWN_R3[tbound + 1] - 2 - core.order)
        return list(range(low, high + 1))

    def cmd_glue(self, cmdict):
        config = self.config
        tbound = cmdict['t'] - 1
        if tbound < 1:
            raise ValueError('glue needs t >= 2, got %d' % cmdict['t'])
        cores = self._inputs(cmdict)
        jobs = [(core, self._degrees(core, tbound)) for core in cores]
        results = {}
        meter = PerfMeter('glue')
        with WorkerPool(config.workers) as pool:
            work = partial(_glue_forms, tbound=tbound,
                           max_edges=config.max_edges,
                           min_degree=config.min_degree)
            for forms in pool.map(_apply_job, [(work, job) for job in jobs]):
                meter.tick(len(forms))
                for form in forms:
                    if form not in results:
                        results[form] = graph6.decode(form)
        meter.report()
        logging.warning('glue: %d cores, %d graphs', len(cores), len(results))
        return self._finish(cmdict, results,
                            self._output_spec(results, config.max_edges))

    def _pairglue_cores(self, plan_line, target_t, pool_cache):
        if 'graphs' not in pool_cache:
            if self.config.infile is not None:
                graphs = {}
                for g in read_graph6_file(self.config.infile):
                    graphs.setdefault(canonical_form(g), g)
            else:
                top = max(line.core.n for line in pool_cache['plan'].lines)
                graphs = {}
                for level in build_census(target_t - 2, top).values():
                    graphs.update(level)
            pool_cache['graphs'] = graphs
        picked = sorted((g.order, g.edge_count, form)
                        for form, g in pool_cache['graphs'].items()
                        if plan_line.core.contains(g))
        cores = [pool_cache['graphs'][form] for _, _, form in picked]
        if self.config.shard is not None:
            cores = shard(cores, *self.config.shard)
        return cores

    def cmd_pairglue(self, cmdict):
        config = self.config
        plan = parse_plan(cmdict['plan'])
        target = plan.target
        if target is None:
            target = CensusSpec(3, config.t, config.n) if config.t else None
        if target is None or target.n is None:
            raise ConfigError('pair gluing needs a target class with an '
                              'order (plan "target" line or --t/--n)')
        degree = plan.degree if plan.degree is not None else config.degree
        if degree is None:
            raise ConfigError('pair gluing needs a regular degree')
        for line in plan.lines:
            if line.core.t != target.t - 2 or line.core.n is None:
                raise ConfigError('core class %s does not fit target %s' % (
                    line.core, target), line.lineno)
            line.shared = line.core.n - target.n + 2 + 2 * degree
            if not 0 <= line.shared <= degree:
                raise ConfigError('core order %d leaves %d shared '
                                  'neighbours' % (line.core.n, line.shared),
                                  line.lineno)

        results = {}
        seen = set()
        stats = Counter()
        cache = {'plan': plan}
        for line in plan.lines:
            cores = self._pairglue_cores(line, target.t, cache)
            logging.warning('plan line %d: %d cores in R(%s), %d shared, '
                            'excluding %s', line.lineno, len(cores),
                            line.core, line.shared,
                            ' '.join(str(s) for s in line.excludes) or '-')
            for core in cores:
                problem = PairGlueProblem(core, target.t, degree, line.shared)
                found = pair_glue(problem, line.excludes,
                                  spill=config.bucket_spill, seen=seen,
                                  stats=stats)
                for form, g in found.items():
                    results.setdefault(form, g)
        logging.warning('pairglue: %s', ', '.join(
            '%s %d' % kv for kv in sorted(stats.items())))
        schedule = '; '.join(
            'core %s exclude %s' % (line.core, ','.join(
                str(s) for s in line.excludes) or '-')
            for line in plan.lines)
        spec = CensusSpec(3, target.t, target.n)
        return self._finish(cmdict, results, spec, schedule=schedule,
                            completeness='%d-regular graphs only' % degree)

    def cmd_verify(self, cmdict):
        config = self.config
        spec = CensusSpec(config.s, cmdict['t'], config.n, config.max_edges)
        report = verify_file(cmdict['in'], spec)
        if config.extend_check:
            if config.s != 3:
                raise ValueError('--extend-check needs s = 3')
            with open(cmdict['in'], 'rb') as f:
                checked = [(lineno, g) for lineno, g in
                           graph6.iter_graph6(f) if spec.contains(g)]
            for lineno, g in checked:
                if one_point_extensions(g, cmdict['t'], config.max_edges):
                    report.violations.append((lineno, 'one-point extends'))
                    logging.error('%s:%d: one-point extends', cmdict['in'],
                                  lineno)
        self._print(counts_table(report.counts))
        self._print('%s: %s' % ('PASS' if report.passed else 'FAIL', report))
        return EXIT_OK if report.passed else EXIT_VIOLATION

    def cmd_census_stats(self, cmdict):
        self._print(str(census_stats(read_graph6_file(cmdict['in']))))
        return EXIT_OK

    def cmd_canon(self, cmdict):
        workdir = os.path.dirname(os.path.abspath(cmdict['out']))
        with open(cmdict['in'], 'rb') as f:
            deduper = dedup_stream(f, self.config.memory_cap, workdir)
        with open(cmdict['out'], 'wb') as f:
            for form in deduper:
                f.write(form + b'\n')
        logging.warning('canon: %d in, %d out', deduper.inputs,
                        sum(deduper.counts.values()))
        self._print(counts_table(deduper.counts))
        return EXIT_OK

    def cmd_census(self, cmdict):
        config = self.config
        t, n, e = cmdict['t'], cmdict['n'], config.max_edges
        with WorkerPool(config.workers) as pool:
            levels = build_census(t, n, e, config.min_degree_pruning,
                                  mapper=pool.map)
        every = '{n}' in cmdict['out']
        for k in sorted(levels):
            if not every and k != n:
                continue
            path = cmdict['out'].replace('{n}', str(k))
            spec = CensusSpec(3, t, k, e)
            seed = CensusSpec(3, t, k - 1, e) if k else None
            counts = write_census(path, levels[k])
            write_manifest(CensusFile(
                path, spec, counts, seed_spec=seed,
                completeness=_COMPLETE_BY_DELETION % (spec, seed)
                if seed else 'empty graph'))
            if k == n:
                self._print(counts_table(counts))
        return EXIT_OK

    def cmd_reextend(self, cmdict):
        config = self.config
        graphs = self._inputs(cmdict)
        with WorkerPool(config.workers) as pool:
            results = forget_and_extend(graphs, cmdict['t'],
                                        config.max_edges, mapper=pool.map)
        return self._finish(cmdict, results,
                            self._output_spec(results, config.max_edges),
                            completeness='partial: forget and extend')

    def cmd_targets(self, cmdict):
        t, n = cmdict['t'], cmdict['n']
        if t - 1 not in KNOWN_R3:
            raise ValueError('R(3,%d) is not known here' % (t - 1))
        for spec in dual_neighbourhood_targets(n, t - 1):
            self._print('R(%s)' % spec)
        return EXIT_OK

    def __call__(self, command):
        '''Run one subcommand, return the exit status.'''
        try:
            cmdict = self.proto(command, self.config)
            return self._commands[command](self, cmdict)
        except (ConfigError, graph6.Graph6Error, ValueError,
                RuntimeError) as e:     # programmed checks, bad input
            errmsg, status = str(e), EXIT_USAGE
        except OSError as e:
            errmsg, status = '%s: %s' % (e.filename or '', e.strerror or e), \
                EXIT_IO
        except Exception as e:  # the Unknown Idiot needs some help
            traceback.print_exception(*sys.exc_info())
            errmsg, status = 'INTERNAL CODING ERROR: %s' % str(e), \
                EXIT_INTERNAL
        print('%s failed: %s' % (command, errmsg), file=sys.stderr)
        return status


def _apply_job(job):
    work, (core, degrees) = job
    return work(core, degrees=degrees)
