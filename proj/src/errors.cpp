#include "hyperzagreb/errors.hpp"

namespace hyperzagreb {

const char* errc_name(errc code) noexcept {
    switch (code) {
        case errc::vertex_out_of_range: return "VertexOutOfRange";
        case errc::duplicate_vertex_in_edge: return "DuplicateVertexInEdge";
        case errc::duplicate_edge: return "DuplicateEdge";
        case errc::edge_too_small: return "EdgeTooSmall";
        case errc::not_uniform: return "NotUniform";
        case errc::not_linear: return "NotLinear";
        case errc::not_connected: return "NotConnected";
        case errc::not_bicyclic: return "NotBicyclic";
        case errc::length_too_small: return "LengthTooSmall";
        case errc::illegal_parameters: return "IllegalParameters";
        case errc::uniformity_mismatch: return "UniformityMismatch";
        case errc::illegal_move: return "IllegalMove";
        case errc::result_not_linear: return "ResultNotLinear";
        case errc::result_duplicate_edge: return "ResultDuplicateEdge";
        case errc::unrecognized_core: return "UnrecognizedCore";
        case errc::parameter_out_of_range: return "ParameterOutOfRange";
        case errc::not_integer: return "NotInteger";
        case errc::too_large: return "TooLarge";
        case errc::guard_exceeded: return "GuardExceeded";
        case errc::empty_family: return "EmptyFamily";
        case errc::invalid_format: return "InvalidFormat";
    }
    return "UnknownError";
}

error::error(errc code, const std::string& message)
    : std::runtime_error(std::string(errc_name(code)) + ": " + message), code_(code) {}

void fail(errc code, const std::string& message) { throw error(code, message); }

}  // namespace hyperzagreb
