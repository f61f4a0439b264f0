#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "fscsynth/models/rational.h"

namespace fscsynth {

struct Parameter {
    std::string name;
    // Admissible interval; graph-preserving analysis uses the open interior.
    Rational lower = 0;
    Rational upper = 1;
};

class ParameterTable {
   public:
    ParamId add(std::string name);
    std::optional<ParamId> find(std::string const& name) const;
    ParamId at(std::string const& name) const;

    std::string const& name(ParamId id) const { return params_.at(id).name; }
    Parameter const& operator[](ParamId id) const { return params_.at(id); }
    std::size_t size() const { return params_.size(); }
    bool empty() const { return params_.empty(); }
    auto begin() const { return params_.begin(); }
    auto end() const { return params_.end(); }

    friend bool operator==(ParameterTable const& a, ParameterTable const& b) { return a.params_ == b.params_; }

   private:
    std::vector<Parameter> params_;
    std::map<std::string, ParamId> index_;
};

inline bool operator==(Parameter const& a, Parameter const& b) {
    return a.name == b.name && a.lower == b.lower && a.upper == b.upper;
}

/// True for tokens usable as parameter or action names in the text formats.
bool isIdentifier(std::string const& token);

class MissingParameterError : public std::runtime_error {
   public:
    MissingParameterError(ParamId id, std::string const& name)
        : std::runtime_error("parameter '" + name + "' is not assigned"), id_(id) {}
    ParamId parameter() const { return id_; }

   private:
    ParamId id_;
};

/// Valuation of parameters; may be partial while being assembled.
class Instantiation {
   public:
    Instantiation() = default;
    explicit Instantiation(std::size_t numParams) : values_(numParams) {}

    void set(ParamId id, Rational value);
    bool has(ParamId id) const { return id < values_.size() && values_[id].has_value(); }
    /// Throws MissingParameterError (named through `names` when given).
    Rational const& at(ParamId id, ParameterTable const* names = nullptr) const;
    std::size_t size() const { return values_.size(); }
    bool isTotal() const;
    std::vector<double> toDouble() const;

    static Instantiation fromDouble(std::vector<double> const& values);

    friend bool operator==(Instantiation const&, Instantiation const&) = default;

   private:
    std::vector<std::optional<Rational>> values_;
};

}  // namespace fscsynth
