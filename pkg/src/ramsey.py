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

""" Ramsey census main module
"""
import argparse
import sys

from cmdproto import RamseyCommandProtocol
from engine import EXIT_USAGE, RamseyCommandEngine as RCE
from run_config import ConfigError, RunConfig
from runlog import ramseyLogger


def make_parser():
    '''One subparser per protocol command, each with the engine flags.'''
    proto = RamseyCommandProtocol()
    parser = argparse.ArgumentParser(
        description='Generate, glue and verify R(3,t,n) census files')
    sub = parser.add_subparsers(dest='command', metavar='command')
    sub.required = True
    for name in proto.commandset:
        cmdparser = sub.add_parser(name, help=proto.doc(name))
        RCE.argparse_extend(cmdparser)
    return parser


def main(argv=None):
    """ ramsey main """
    parseargs = make_parser().parse_args(argv)
    try:
        config = RunConfig.from_args(parseargs)
    except ConfigError as e:
        print('%s: %s' % (parseargs.command, str(e)), file=sys.stderr)
        return EXIT_USAGE

    ramseyLogger('ramsey', config.verbose, config.logfile)
    engine = RCE(config)
    return engine(parseargs.command)


if __name__ == '__main__':
    sys.exit(main())
