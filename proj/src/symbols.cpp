#include "chargealg/symbols.hpp"

#include "chargealg/errors.hpp"

namespace chargealg {

std::string_view to_string(SymbolKind kind) {
    switch (kind) {
    case SymbolKind::Parameter:
        return "parameter";
    case SymbolKind::Time:
        return "time";
    case SymbolKind::Coordinate:
        return "coordinate";
    case SymbolKind::Velocity:
        return "velocity";
    case SymbolKind::Momentum:
        return "momentum";
    }
    return "?";
}

std::string SymbolTable::velocity_name(std::string_view coordinate) {
    return "d" + std::string(coordinate);
}

std::string SymbolTable::momentum_name(std::string_view coordinate) {
    if (coordinate.size() > 1 && coordinate.front() == 'q') {
        return "p" + std::string(coordinate.substr(1));
    }
    if (coordinate == "q") {
        return "p";
    }
    return "p" + std::string(coordinate);
}

SymbolTable::SymbolTable(std::vector<std::string> coordinates, std::vector<ParameterDecl> parameters) {
    for (auto &param : parameters) {
        parameters_.push_back(add(std::move(param.name), SymbolKind::Parameter, param.positive));
    }
    time_ = add(std::string(time_name), SymbolKind::Time, false);
    for (const auto &c : coordinates) {
        coordinates_.push_back(add(c, SymbolKind::Coordinate, false));
    }
    for (const auto &c : coordinates) {
        velocities_.push_back(add(velocity_name(c), SymbolKind::Velocity, false));
    }
    for (const auto &c : coordinates) {
        momenta_.push_back(add(momentum_name(c), SymbolKind::Momentum, false));
    }
}

SymbolTable SymbolTable::with_extra_parameters(const std::vector<ParameterDecl> &extra) const {
    SymbolTable out = *this;
    for (const auto &param : extra) {
        out.parameters_.push_back(out.add(param.name, SymbolKind::Parameter, param.positive));
    }
    return out;
}

SymbolId SymbolTable::add(std::string name, SymbolKind kind, bool positive) {
    if (index_.contains(name)) {
        throw DuplicateSymbolError(name);
    }
    const auto id = static_cast<SymbolId>(names_.size());
    index_.emplace(name, id);
    names_.push_back(std::move(name));
    kinds_.push_back(kind);
    positive_.push_back(positive);
    return id;
}

std::optional<SymbolId> SymbolTable::find(std::string_view name) const {
    if (auto it = index_.find(std::string(name)); it != index_.end()) {
        return it->second;
    }
    return std::nullopt;
}

SymbolId SymbolTable::id(std::string_view name) const {
    if (auto found = find(name)) {
        return *found;
    }
    throw UnknownSymbolError(std::string(name));
}

const std::string &SymbolTable::name(SymbolId id) const {
    if (id >= names_.size()) {
        throw UnknownSymbolError("#" + std::to_string(id));
    }
    return names_[id];
}

SymbolKind SymbolTable::kind(SymbolId id) const {
    if (id >= kinds_.size()) {
        throw UnknownSymbolError("#" + std::to_string(id));
    }
    return kinds_[id];
}

bool SymbolTable::positive(SymbolId id) const {
    return id < positive_.size() && positive_[id];
}

std::vector<std::string> SymbolTable::coordinate_names() const {
    std::vector<std::string> out;
    for (auto id : coordinates_) {
        out.push_back(names_[id]);
    }
    return out;
}

std::vector<ParameterDecl> SymbolTable::parameter_decls() const {
    std::vector<ParameterDecl> out;
    for (auto id : parameters_) {
        out.push_back({names_[id], positive_[id]});
    }
    return out;
}

bool SymbolTable::operator==(const SymbolTable &other) const {
    return names_ == other.names_ && kinds_ == other.kinds_ && positive_ == other.positive_;
}

} // namespace chargealg
