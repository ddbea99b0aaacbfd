#pragma once

#include <stdexcept>
#include <string>

namespace hibi {

enum class errc {
    cycle_detected,
    index_out_of_range,
    lattice_too_large,
    not_a_chain,
    not_homogeneous,
    variable_count_mismatch,
    target_too_small,
    precondition_violated,
    is_actually_chain,
    cap_exceeded,
    lower_degree_residue,
    unsupported,
    parse_error,
    internal_error,
};

/// Domain error carrying a machine-readable code alongside the message.
class error : public std::runtime_error {
public:
    error(errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
    errc code() const { return code_; }

private:
    errc code_;
};

} // namespace hibi
