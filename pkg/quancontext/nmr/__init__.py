from .params import (MolecularHamiltonianParams, ParamsFileError, malonic_acid, read_params_file,  # noqa
                     parse_params, format_params, spin_pairs, DEFAULT_PARAMS_FILE)
from .hamiltonian import (build_hamiltonian, free_evolution, zeeman_term, dipolar_term,  # noqa
                          scalar_term, pair_operator)
from .fid import (FidTrace, TransitionLine, transition_lines, simulate_fid, fid_from_lines,  # noqa
                  transverse_state, detection_operator, DEFAULT_DWELL, DEFAULT_SAMPLES, DEFAULT_T2_STAR)
from .spectrum import (Spectrum, Peak, ClusterCenter, SPECTRUM_CSV_HEADER, spectrum, find_peaks,  # noqa
                       cluster_center, cluster_centers, merge_clusters, molecule_spectrum)
