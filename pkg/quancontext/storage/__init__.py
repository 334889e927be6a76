from .h5py_utils import (FileLockedError, LockFile, save_dict, open_h5, open_h5_group, keys_h5,  # noqa
                         ClassWithAsdict, ClassWithAsarray)
