#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace chargealg {

using SymbolId = std::uint32_t;

enum class SymbolKind { Parameter, Time, Coordinate, Velocity, Momentum };

std::string_view to_string(SymbolKind kind);

struct ParameterDecl {
    std::string name;
    bool positive = false;

    bool operator==(const ParameterDecl &) const = default;
};

/// Registry of every symbol an expression may mention.
///
/// Ids are assigned in declaration order (parameters, time, coordinates,
/// velocities, momenta, then any extra parameters appended later) and that
/// order is the symbol order used by the canonical monomial ordering.
/// Velocity and momentum names are derived from the coordinate names:
/// `q1 -> dq1, p1`; `x -> dx, px`.
class SymbolTable {
  public:
    SymbolTable() = default;
    SymbolTable(std::vector<std::string> coordinates, std::vector<ParameterDecl> parameters);

    static std::string velocity_name(std::string_view coordinate);
    static std::string momentum_name(std::string_view coordinate);
    static constexpr std::string_view time_name = "t";

    /// Copy of this table with extra parameters appended. Existing ids stay valid.
    SymbolTable with_extra_parameters(const std::vector<ParameterDecl> &extra) const;

    std::size_t size() const { return names_.size(); }
    std::size_t dof() const { return coordinates_.size(); }

    std::optional<SymbolId> find(std::string_view name) const;
    /// Throws UnknownSymbolError.
    SymbolId id(std::string_view name) const;

    const std::string &name(SymbolId id) const;
    SymbolKind kind(SymbolId id) const;
    bool positive(SymbolId id) const;

    SymbolId time() const { return time_; }
    SymbolId coordinate(std::size_t i) const { return coordinates_.at(i); }
    SymbolId velocity(std::size_t i) const { return velocities_.at(i); }
    SymbolId momentum(std::size_t i) const { return momenta_.at(i); }

    const std::vector<SymbolId> &coordinates() const { return coordinates_; }
    const std::vector<SymbolId> &velocities() const { return velocities_; }
    const std::vector<SymbolId> &momenta() const { return momenta_; }
    const std::vector<SymbolId> &parameters() const { return parameters_; }

    std::vector<std::string> coordinate_names() const;
    std::vector<ParameterDecl> parameter_decls() const;

    bool operator==(const SymbolTable &other) const;

  private:
    SymbolId add(std::string name, SymbolKind kind, bool positive);

    std::vector<std::string> names_;
    std::vector<SymbolKind> kinds_;
    std::vector<bool> positive_;
    std::unordered_map<std::string, SymbolId> index_;
    std::vector<SymbolId> coordinates_;
    std::vector<SymbolId> velocities_;
    std::vector<SymbolId> momenta_;
    std::vector<SymbolId> parameters_;
    SymbolId time_ = 0;
};

} // namespace chargealg
