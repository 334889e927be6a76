from .dephasing import (NoiseModel, dephasing_eta, dephasing_kraus, n_fold_channel,  # noqa
                        three_fold_channel)
from .sweep import (SweepPoint, SweepSeries, SWEEP_CSV_HEADER, DEFAULT_RATIOS,  # noqa
                    noisy_suite_beta, beta_sweep)
