#pragma once

#include <stdexcept>
#include <string>

namespace ricci {

enum class errc {
    index_out_of_range,
    not_an_edge,
    same_vertex,
    malformed_graph6,
    unsupported_size,
    malformed_edge_list,
    non_square,
    negative_cost,
    too_large,
    entry_out_of_range,
    alpha_out_of_range,
    isolated_vertex,
    not_probability,
    unreachable_mass,
    unequal_degrees,
    invalid_params,
    unknown_fixture,
    out_of_supported_range,
    disconnected,
    no_edges,
    not_regular,
    empty_graph,
    division_by_zero,
    arithmetic_overflow,
};

/// Library-wide exception. `code()` identifies the violated precondition.
class error : public std::runtime_error {
public:
    error(errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
    errc code() const noexcept { return code_; }

private:
    errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& what) { throw error(code, what); }

} // namespace ricci
