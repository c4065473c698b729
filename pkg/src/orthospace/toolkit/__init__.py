"""File formats, generators, census machinery and the command line tool."""

from .formats import SpaceDocument, export_dot_lattice, export_dot_space, parse_osp, report_json, serialize_osp
from .generators import dspace, nset, peres_rays, rational_fragment, rational_fragment9, triad_square, triangle_plus_pair, triangle_with_tails, twin_squares
from .census import CensusRecord, canonical_certificate, census, class_representatives, isomorphic
from .search import search_fixture
