#pragma once

#include <stdexcept>
#include <string>

namespace hyperzagreb {

/// Failure categories raised by the library. Each maps one-to-one onto a
/// documented precondition or guard of some operation.
enum class errc {
    vertex_out_of_range,
    duplicate_vertex_in_edge,
    duplicate_edge,
    edge_too_small,
    not_uniform,
    not_linear,
    not_connected,
    not_bicyclic,
    length_too_small,
    illegal_parameters,
    uniformity_mismatch,
    illegal_move,
    result_not_linear,
    result_duplicate_edge,
    unrecognized_core,
    parameter_out_of_range,
    not_integer,
    too_large,
    guard_exceeded,
    empty_family,
    invalid_format,
};

const char* errc_name(errc code) noexcept;

class error : public std::runtime_error {
public:
    error(errc code, const std::string& message);
    errc code() const noexcept { return code_; }

private:
    errc code_;
};

[[noreturn]] void fail(errc code, const std::string& message);

}  // namespace hyperzagreb
