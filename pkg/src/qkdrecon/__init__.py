"""qkdrecon: rate-compatible LDPC information reconciliation laboratory.

Subpackages cover sparse code construction (ldpc), syndrome-conditioned
belief propagation (decoder), rate modulation (rate), the reconciliation
session and wire format (protocol), the Cascade baseline (cascade), BSC
simulation (channel), asymptotic thresholds (density), and the Monte
Carlo experiment harness (harness, cli).
"""

from .ldpc import (DegreeDistribution, ParityCheckMatrix, Syndrome,
                   load_alist, load_degree_distribution, peg_construct,
                   regular_distribution, store_alist, syndrome)
from .decoder import DecodeResult, SyndromeDecoder, channel_llrs, decode_syndrome
from .rate import (ModulationPlan, RateOutOfRangeError, build_extended_word,
                   constant_efficiency, extend_shortening, modulated_rate,
                   plan_from_estimate, rate_interval, table_efficiency)
from .channel import ChannelModel, EstimationSample, bsc_transmit, draw_sample, random_key
from .protocol import (Ack, CodeEntry, ReconcileConfig, ReconciliationTranscript,
                       Reveal, SamplePositions, SyndromeAnnounce, decode_message,
                       efficiency, encode_message, estimate_error_rate, reconcile)
from .cascade import CascadeConfig, CascadeTranscript, binary_search_error, cascade_reconcile
from .density import (DEGrid, MessageDensity, ThresholdResult, channel_density,
                      de_evolve, de_threshold, threshold_curve)
from .harness import (ExperimentConfig, SweepRecord, emit_plot_script,
                      load_config, run_sweep, run_thresholds)
from .util import LLR_MAX, binary_entropy

__version__ = "0.1.0"
