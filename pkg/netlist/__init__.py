from .model import NodeKind, Gate, Netlist, NetlistBuilder, NetlistInstance
from .semantics import (
    Semantics,
    IdealSemantics,
    DegradedSemantics,
    TransientSemantics,
    evaluate,
    evaluate_ideal,
    evaluate_mu,
    evaluate_transient,
    evaluate_batch,
)
from .builders import (
    comparator,
    bitonic_network,
    bitonic_comparator_count,
    bitonic_stage_count,
    median_network,
    implication_network,
    lukasiewicz_implies,
    kleene_dienes_implies,
)
from .io import netlist_to_dict, netlist_from_dict, load_netlist, dump_netlist

__all__ = ['NodeKind', 'Gate', 'Netlist', 'NetlistBuilder', 'NetlistInstance', 'Semantics',
           'IdealSemantics', 'DegradedSemantics', 'TransientSemantics', 'evaluate',
           'evaluate_ideal', 'evaluate_mu', 'evaluate_transient', 'evaluate_batch',
           'comparator', 'bitonic_network', 'bitonic_comparator_count', 'bitonic_stage_count',
           'median_network', 'implication_network', 'lukasiewicz_implies',
           'kleene_dienes_implies', 'netlist_to_dict', 'netlist_from_dict', 'load_netlist',
           'dump_netlist']
