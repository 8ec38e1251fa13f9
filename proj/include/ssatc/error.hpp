#pragma once

#include <stdexcept>
#include <string>

namespace ssatc {

enum class Errc {
    TautologicalClause,
    DuplicateBinding,
    NotAMatrixClause,
    PremiseViolated,
    PivotMissing,
    TautologicalResolvent,
    PrefixOrderViolated,
    DcPolicyVariablesOutsideCommon,
    TooLarge,
    ParseError,
    DistributionSumError,
    UnknownState,
    MissingTarget,
    MissingRegion,
    PartitionNotCovering,
    NotStabilized,
    KernelNotInvariant,
    InvalidFormula,
    InvalidArgument,
    InternalCheckFailed,
};

const char* errc_name(Errc c);

class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& msg)
        : std::runtime_error(std::string(errc_name(code)) + ": " + msg), code_(code) {}

    Errc code() const { return code_; }

private:
    Errc code_;
};

} // namespace ssatc
