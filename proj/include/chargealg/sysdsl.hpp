#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "chargealg/expr.hpp"
#include "chargealg/symbols.hpp"

namespace chargealg {

/// One infinitesimal point transformation: q_j -> q_j + a delta_q[j],
/// t -> t + a delta_t, optionally with a declared surface term.
struct GeneratorDecl {
    std::string name;
    std::vector<Expr> delta_q; ///< one per coordinate; functions of (q, t, params)
    Expr delta_t;              ///< function of (t, params)
    std::optional<Expr> lambda;

    bool operator==(const GeneratorDecl &) const = default;
};

struct SystemSpec {
    std::string name;
    SymbolTable symbols;
    Expr lagrangian; ///< in (q, dq, t, params)
    std::vector<GeneratorDecl> generators;

    std::size_t dof() const { return symbols.dof(); }
    bool operator==(const SystemSpec &) const = default;
};

/// Parses a system file. Throws ParseError carrying a line/column for every
/// syntax or validation failure.
///
///   system "name"
///   params { M > 0, e, B, c > 0 }
///   coords { q1, q2 }
///   lagrangian = M/2*(dq1^2 + dq2^2)
///   generator "trans1" { delta { q1 = 1 } [delta_t = ...] [lambda = ...] }
SystemSpec parse_system(std::string_view text);

/// Inverse of parse_system: parse_system(render_system(s)) == s.
std::string render_system(const SystemSpec &spec);

/// Checks the invariants parse_system enforces, for specs built in code.
/// Throws RejectionError.
void validate(const SystemSpec &spec);

} // namespace chargealg
