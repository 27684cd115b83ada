"""Exact lattice growth models: aggregation of boxes and of partitions."""
from .chains import (fibonacci_limit_report, most_frequent_trace, n_step_probability,
                     self_agg_distribution, unit_box_step)
from .distributions import (box_distribution, box_distribution_2d, growth_count_pmf,
                            growth_direction_prob, moment, orient, unit_box_distribution,
                            unit_mean_directions)
from .geometry import aggregate_at, attachment_count, parameter_set
from .partitions import (overlaps, partition_distribution, partition_distribution_combinatorial,
                         rotations)

__version__ = "0.1.0"
