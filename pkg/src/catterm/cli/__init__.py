"""Command line and string-diagram export."""

from .diagram import DEdge, DiagramGraph, DNode, NODE_KINDS, export_diagram, render
from .main import RunReport, build_parser, main, run_command
