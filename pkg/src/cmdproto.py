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

from collections import OrderedDict

from run_config import ConfigObject as GO


class RamseyCommandProtocol(object):
    '''Subcommand table.  parms are the RunConfig options a command cannot
       run without; __call__ turns a RunConfig into the command dict.'''

    _commands = {

        'extend': GO(
            doc='one-point extend every input graph',
            parms=('in', 'out', 't'),
        ),
        'glue': GO(
            doc='neighbourhood gluing over every input core',
            parms=('in', 'out', 't'),
        ),
        'pairglue': GO(
            doc='regular targets from pairs of core extensions, by plan',
            parms=('plan', 'out'),
        ),
        'verify': GO(
            doc='check every graph of a file against a census class',
            parms=('in', 't'),
        ),
        'census-stats': GO(
            doc='per-(n,e) counts and degree histograms of a file',
            parms=('in', ),
        ),
        'canon': GO(
            doc='canonicalize, deduplicate and sort a graph6 file',
            parms=('in', 'out'),
        ),
        'census': GO(
            doc='bottom-up census from the empty graph to order n',
            parms=('t', 'n', 'out'),
        ),
        'reextend': GO(
            doc='delete each vertex and one-point extend the results',
            parms=('in', 'out', 't'),
        ),
        'targets': GO(
            doc='census classes holding some dual neighbourhood of R(3,t,n)',
            parms=('t', 'n'),
        ),

    }   # _commands

    def __call__(self, command, config):
        go = self._commands[command]    # natural keyerror is fine here
        cmdict = OrderedDict((
            ('command', command),
            ('config', config),
        ))
        missing = []
        for p in go.parms:
            value = config[p] if p != 'in' else config.infile
            if value is None:
                missing.append(p)
            cmdict[p] = value
        if missing:
            raise RuntimeError('%s: missing parameter(s) %s' % (
                command, ', '.join('--' + p.replace('_', '-')
                                   for p in missing)))
        return cmdict

    @property
    def commandset(self):
        return tuple(sorted(self._commands.keys()))

    def doc(self, command):
        return self._commands[command].doc

    @property
    def help(self):
        docs = []
        for name in self.commandset:
            go = self._commands[name]
            docs.append('{}{}: {}'.format(name, go.parms, go.doc))
        return '\n'.join(docs)
