from .probe import (ProbeSpec, probe_state, controlled_observable, eigenprojectors,  # noqa
                    probe_x_observable)
from .experiment import (CorrelationExperiment, final_state, measure_correlation,  # noqa
                         outcome_probabilities, reference_correlation, correlation_of)
from .suite import (SuiteResult, SuiteTerm, EpsilonCorrectionError, SUITE_CSV_HEADER,  # noqa
                    run_experiment_suite)
from .unital import (UnitalReport, unital_equivalence_check, efficient_statistics,  # noqa
                     mixed_probe_statistics, is_unital, relaxation_kraus, unitary_kraus)
