"""Left ideal LRPC codes over group algebras and a ROLLO-I style KEM."""

from ._backend import backend_name, set_backend
from .algebra import AlgebraElement, ga_add, ga_inverse, ga_is_invertible, ga_mul, lim
from .errors import (DecapFailure, DecodeFailure, FormatError, NoSolution, NotInvertible,
                     ParameterError, SamplingError, SingularMatrix, StructureError)
from .field import FFElem, FieldParams
from .group import GroupDescriptor, cyclic, dihedral, from_cayley_table, parse_group
from .kem import (Ciphertext, KemParams, PublicKey, SecretKey, decap, encap, hash_subspace,
                  keygen, serialize, deserialize)
from .linalg import (Matrix, Subspace, intersect, matrix_inverse, rref, sample_subspace,
                     scalar_subspace, solve_left, span, subspace_product)
from .lrpc import LrpcCode, LrpcParams, build_code, parity_check, rsr, syndrome, systematic_form

__version__ = "0.1.0"
