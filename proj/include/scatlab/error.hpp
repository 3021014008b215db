#pragma once

#include <stdexcept>
#include <string>

namespace scatlab {

enum class errc {
    composite_p,
    reducible_modulus,
    degree_mismatch,
    budget_exceeded,
    hypothesis_violated,
    invalid_parameter,
    invalid_eta,
    degenerate_configuration,
    vertex_meets_subgeometry,
    vertex_meets_axis,
    parse_error,
    internal
};

/// @brief Exception carrying a structured error code next to its message.
class error : public std::runtime_error {
   public:
    error(errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
    errc code() const noexcept { return code_; }

    static const char* name(errc c) {
        switch (c) {
            case errc::composite_p: return "CompositeP";
            case errc::reducible_modulus: return "ReducibleModulus";
            case errc::degree_mismatch: return "DegreeMismatch";
            case errc::budget_exceeded: return "BudgetExceeded";
            case errc::hypothesis_violated: return "HypothesisViolated";
            case errc::invalid_parameter: return "InvalidParameter";
            case errc::invalid_eta: return "InvalidEta";
            case errc::degenerate_configuration: return "DegenerateConfiguration";
            case errc::vertex_meets_subgeometry: return "VertexMeetsSubgeometry";
            case errc::vertex_meets_axis: return "VertexMeetsAxis";
            case errc::parse_error: return "ParseError";
            case errc::internal: return "Internal";
        }
        return "Unknown";
    }

   private:
    errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& what) { throw error(code, what); }

}  // namespace scatlab
