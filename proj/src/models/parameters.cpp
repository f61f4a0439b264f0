#include "fscsynth/models/parameters.h"

#include <cctype>

namespace fscsynth {

ParamId ParameterTable::add(std::string name) {
    if (!isIdentifier(name)) throw std::invalid_argument("invalid parameter name '" + name + "'");
    if (index_.count(name)) throw std::invalid_argument("duplicate parameter '" + name + "'");
    auto id = static_cast<ParamId>(params_.size());
    index_.emplace(name, id);
    params_.push_back(Parameter{std::move(name)});
    return id;
}

std::optional<ParamId> ParameterTable::find(std::string const& name) const {
    auto it = index_.find(name);
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

ParamId ParameterTable::at(std::string const& name) const {
    auto id = find(name);
    if (!id) throw std::invalid_argument("unknown parameter '" + name + "'");
    return *id;
}

bool isIdentifier(std::string const& token) {
    if (token.empty()) return false;
    auto first = static_cast<unsigned char>(token.front());
    if (!std::isalpha(first) && token.front() != '_') return false;
    for (char c : token) {
        auto u = static_cast<unsigned char>(c);
        if (!std::isalnum(u) && c != '_' && c != '@' && c != '.' && c != '\'') return false;
    }
    return true;
}

void Instantiation::set(ParamId id, Rational value) {
    if (id >= values_.size()) values_.resize(id + 1);
    values_[id] = std::move(value);
}

Rational const& Instantiation::at(ParamId id, ParameterTable const* names) const {
    if (!has(id)) {
        std::string name = names && id < names->size() ? names->name(id) : "#" + std::to_string(id);
        throw MissingParameterError(id, name);
    }
    return *values_[id];
}

bool Instantiation::isTotal() const {
    for (auto const& v : values_) {
        if (!v) return false;
    }
    return true;
}

std::vector<double> Instantiation::toDouble() const {
    std::vector<double> result(values_.size(), 0.0);
    for (std::size_t i = 0; i < values_.size(); ++i) {
        if (values_[i]) result[i] = values_[i]->get_d();
    }
    return result;
}

Instantiation Instantiation::fromDouble(std::vector<double> const& values) {
    Instantiation u(values.size());
    for (std::size_t i = 0; i < values.size(); ++i) u.set(static_cast<ParamId>(i), fscsynth::fromDouble(values[i]));
    return u;
}

}  // namespace fscsynth
