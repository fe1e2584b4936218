#pragma once

#include <stdexcept>
#include <string>

namespace adeq {

// Base class for every failure raised by the toolkit.
struct Error : std::runtime_error {
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

#define ADEQ_DEFINE_ERROR(Name)                                   \
  struct Name : Error {                                           \
    explicit Name(const std::string& what) : Error(what) {}       \
  }

// Table / element validation
ADEQ_DEFINE_ERROR(OutOfRangeError);
ADEQ_DEFINE_ERROR(NonAssociativeError);
ADEQ_DEFINE_ERROR(NotIdempotentError);
ADEQ_DEFINE_ERROR(NotAdequateError);
ADEQ_DEFINE_ERROR(NotClosedError);
ADEQ_DEFINE_ERROR(PreconditionFailedError);

// Transversal analysis
ADEQ_DEFINE_ERROR(NotAdequateSubError);
ADEQ_DEFINE_ERROR(NotStarSubError);
ADEQ_DEFINE_ERROR(NotUniqueDecompositionError);
ADEQ_DEFINE_ERROR(NoDecompositionError);
ADEQ_DEFINE_ERROR(NotQuasiIdealError);

// Constructions
ADEQ_DEFINE_ERROR(AxiomsFailedError);
ADEQ_DEFINE_ERROR(ClosureFailedError);
ADEQ_DEFINE_ERROR(DataInvalidError);
ADEQ_DEFINE_ERROR(ConstructionFailedError);
ADEQ_DEFINE_ERROR(IsoFailedError);
ADEQ_DEFINE_ERROR(NotRegularError);
ADEQ_DEFINE_ERROR(NotInverseSubError);
ADEQ_DEFINE_ERROR(UniquenessFailedError);
ADEQ_DEFINE_ERROR(NotRegularOutcomeError);
ADEQ_DEFINE_ERROR(NotLeftNormalError);
ADEQ_DEFINE_ERROR(NotSemilatticeTransversalError);

// Harness
ADEQ_DEFINE_ERROR(ParamOutOfRangeError);
ADEQ_DEFINE_ERROR(SyntaxError);

// Two independent routes to the same fact disagreed.  Always an
// implementation bug, never a property of the input.
ADEQ_DEFINE_ERROR(InternalInconsistencyError);

#undef ADEQ_DEFINE_ERROR

}  // namespace adeq
