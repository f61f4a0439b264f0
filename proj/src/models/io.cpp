#include "fscsynth/models/io.h"

#include <cctype>
#include <cstdio>
#include <fstream>
#include <map>
#include <sstream>

#include "fscsynth/models/expression.h"

namespace fscsynth {

std::vector<SourceLine> splitLines(std::string_view text) {
    std::vector<SourceLine> lines;
    std::size_t number = 0;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t end = text.find('\n', start);
        if (end == std::string_view::npos) end = text.size();
        ++number;
        std::string_view line = text.substr(start, end - start);
        if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
        SourceLine parsed{number, line, {}};
        std::size_t i = 0;
        while (i < line.size()) {
            while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
            std::size_t j = i;
            while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
            if (j > i) parsed.tokens.push_back({line.substr(i, j - i), i + 1});
            i = j;
        }
        if (!parsed.tokens.empty()) lines.push_back(parsed);
        if (end == text.size()) break;
        start = end + 1;
    }
    return lines;
}

namespace {

[[noreturn]] void fail(SourceLine const& line, std::size_t tokenIndex, std::string const& message) {
    std::size_t column = tokenIndex < line.tokens.size() ? line.tokens[tokenIndex].column
                                                         : line.text.size() + 1;
    throw ParseError(message, line.number, column);
}

void expectArity(SourceLine const& line, std::size_t minimum, std::size_t maximum) {
    if (line.tokens.size() < minimum) fail(line, line.tokens.size(), "missing argument");
    if (line.tokens.size() > maximum) fail(line, maximum, "unexpected extra argument");
}

std::uint64_t parseCount(SourceLine const& line, std::size_t index) {
    std::string_view t = line.tokens[index].text;
    if (t.empty() || t.size() > 18) fail(line, index, "expected a non-negative integer");
    std::uint64_t value = 0;
    for (char c : t) {
        if (!std::isdigit(static_cast<unsigned char>(c))) fail(line, index, "expected a non-negative integer");
        value = value * 10 + static_cast<std::uint64_t>(c - '0');
    }
    return value;
}

StateId parseState(SourceLine const& line, std::size_t index, std::optional<std::size_t> numStates) {
    if (!numStates) fail(line, index, "'states' must be declared first");
    std::uint64_t s = parseCount(line, index);
    if (s >= *numStates) fail(line, index, "state " + std::to_string(s) + " is not declared");
    return static_cast<StateId>(s);
}

Rational parseProbability(SourceLine const& line, std::size_t index) {
    try {
        return parseRational(line.tokens[index].text);
    } catch (std::invalid_argument const&) {
        fail(line, index, "malformed number '" + std::string(line.tokens[index].text) + "'");
    }
}

void parseLabel(SourceLine const& line, std::optional<std::size_t> numStates, StateSet& goal, StateSet& bad) {
    expectArity(line, 2, SIZE_MAX);
    StateSet* target = nullptr;
    if (line.tokens[1].text == "goal") {
        target = &goal;
    } else if (line.tokens[1].text == "bad") {
        target = &bad;
    } else {
        fail(line, 1, "unknown label '" + std::string(line.tokens[1].text) + "' (expected goal or bad)");
    }
    for (std::size_t i = 2; i < line.tokens.size(); ++i) target->push_back(parseState(line, i, numStates));
    normalize(*target);
}

std::string_view restOfLine(SourceLine const& line, std::size_t tokenIndex) {
    return line.text.substr(line.tokens[tokenIndex].column - 1);
}

void writeHeader(std::ostringstream& out, std::vector<std::string> const& header) {
    for (auto const& h : header) out << "# " << h << '\n';
}

void writeLabels(std::ostringstream& out, StateSet const& goal, StateSet const& bad) {
    for (auto const& [name, set] : {std::pair{"goal", &goal}, std::pair{"bad", &bad}}) {
        if (set->empty()) continue;
        out << "label " << name;
        for (StateId s : *set) out << ' ' << s;
        out << '\n';
    }
}

}  // namespace

Pomdp parsePomdp(std::string_view text) {
    auto lines = splitLines(text);
    if (lines.empty() || lines.front().tokens.front().text != "pomdp") {
        throw ParseError("expected 'pomdp' header", lines.empty() ? 1 : lines.front().number, 1);
    }
    expectArity(lines.front(), 1, 1);
    PomdpBuilder b;
    std::optional<std::size_t> numStates;
    std::optional<std::size_t> numObservations;
    bool haveInitial = false;
    std::vector<std::optional<ObservationId>> obs;
    for (std::size_t i = 1; i < lines.size(); ++i) {
        SourceLine const& line = lines[i];
        std::string_view key = line.tokens.front().text;
        if (key == "states") {
            expectArity(line, 2, 2);
            if (numStates) fail(line, 0, "duplicate 'states'");
            numStates = parseCount(line, 1);
            if (*numStates == 0) fail(line, 1, "a model needs at least one state");
            obs.assign(*numStates, std::nullopt);
        } else if (key == "initial") {
            expectArity(line, 2, 2);
            b.initial = parseState(line, 1, numStates);
            haveInitial = true;
        } else if (key == "observations") {
            expectArity(line, 2, 2);
            numObservations = parseCount(line, 1);
        } else if (key == "obs") {
            expectArity(line, 3, 3);
            StateId s = parseState(line, 1, numStates);
            if (!numObservations) fail(line, 0, "'observations' must be declared first");
            std::uint64_t z = parseCount(line, 2);
            if (z >= *numObservations) fail(line, 2, "observation " + std::to_string(z) + " is not declared");
            if (obs[s]) fail(line, 1, "state " + std::to_string(s) + " already has an observation");
            obs[s] = static_cast<ObservationId>(z);
        } else if (key == "trans") {
            expectArity(line, 5, 5);
            StateId s = parseState(line, 1, numStates);
            if (!isIdentifier(std::string(line.tokens[2].text))) fail(line, 2, "malformed action label");
            StateId t = parseState(line, 3, numStates);
            Rational p = parseProbability(line, 4);
            if (p < 0 || p > 1) fail(line, 4, "probability outside [0,1]");
            b.edges.push_back({s, std::string(line.tokens[2].text), t, p});
        } else if (key == "reward") {
            expectArity(line, 4, 4);
            StateId s = parseState(line, 1, numStates);
            Rational r = parseProbability(line, 3);
            if (r < 0) fail(line, 3, "rewards must be non-negative");
            b.rewards.emplace_back(s, std::string(line.tokens[2].text), r);
        } else if (key == "label") {
            parseLabel(line, numStates, b.goal, b.bad);
        } else {
            fail(line, 0, "unknown keyword '" + std::string(key) + "'");
        }
    }
    std::size_t last = lines.back().number;
    if (!numStates) throw ParseError("missing 'states'", last, 1);
    if (!haveInitial) throw ParseError("missing 'initial'", last, 1);
    if (!numObservations) throw ParseError("missing 'observations'", last, 1);
    b.numStates = *numStates;
    b.numObservations = *numObservations;
    for (StateId s = 0; s < *numStates; ++s) {
        if (!obs[s]) throw ModelError("state " + std::to_string(s) + " has no observation");
        b.observation.push_back(*obs[s]);
    }
    Pomdp m = b.build();
    m.validate();
    return m;
}

std::string writePomdp(Pomdp const& m, std::vector<std::string> const& header) {
    std::ostringstream out;
    writeHeader(out, header);
    out << "pomdp\n";
    out << "states " << m.numStates() << '\n';
    out << "initial " << m.mdp.initial << '\n';
    out << "observations " << m.numObservations << '\n';
    for (StateId s = 0; s < m.numStates(); ++s) out << "obs " << s << ' ' << m.observation[s] << '\n';
    for (StateId s = 0; s < m.numStates(); ++s) {
        for (auto const& c : m.mdp.choices[s]) {
            for (auto const& t : c.distribution) {
                out << "trans " << s << ' ' << m.mdp.actions[c.action] << ' ' << t.target << ' '
                    << toString(t.value) << '\n';
            }
        }
    }
    for (StateId s = 0; s < m.numStates(); ++s) {
        for (auto const& c : m.mdp.choices[s]) {
            if (c.reward != 0) out << "reward " << s << ' ' << m.mdp.actions[c.action] << ' ' << toString(c.reward) << '\n';
        }
    }
    writeLabels(out, m.mdp.goal, m.mdp.bad);
    return out.str();
}

Pmc parsePmc(std::string_view text) {
    auto lines = splitLines(text);
    if (lines.empty() || lines.front().tokens.front().text != "pmc") {
        throw ParseError("expected 'pmc' header", lines.empty() ? 1 : lines.front().number, 1);
    }
    expectArity(lines.front(), 1, 1);
    Pmc d;
    std::optional<std::size_t> numStates;
    bool haveInitial = false;
    std::map<StateId, Polynomial> rewards;
    for (std::size_t i = 1; i < lines.size(); ++i) {
        SourceLine const& line = lines[i];
        std::string_view key = line.tokens.front().text;
        auto expr = [&](std::size_t index) {
            ExpressionOptions options;
            options.line = line.number;
            options.column = line.tokens[index].column;
            return parsePolynomial(restOfLine(line, index), d.parameters, options);
        };
        if (key == "states") {
            expectArity(line, 2, 2);
            if (numStates) fail(line, 0, "duplicate 'states'");
            numStates = parseCount(line, 1);
            if (*numStates == 0) fail(line, 1, "a model needs at least one state");
            d.rows.resize(*numStates);
        } else if (key == "initial") {
            expectArity(line, 2, 2);
            d.initial = parseState(line, 1, numStates);
            haveInitial = true;
        } else if (key == "params") {
            for (std::size_t j = 1; j < line.tokens.size(); ++j) {
                std::string name(line.tokens[j].text);
                if (!isIdentifier(name)) fail(line, j, "malformed parameter name '" + name + "'");
                if (d.parameters.find(name)) fail(line, j, "duplicate parameter '" + name + "'");
                d.parameters.add(name);
            }
        } else if (key == "group") {
            expectArity(line, 2, SIZE_MAX);
            std::vector<ParamId> group;
            for (std::size_t j = 1; j < line.tokens.size(); ++j) {
                auto id = d.parameters.find(std::string(line.tokens[j].text));
                if (!id) fail(line, j, "unknown parameter '" + std::string(line.tokens[j].text) + "'");
                group.push_back(*id);
            }
            d.groups.push_back(group);
        } else if (key == "trans") {
            expectArity(line, 4, SIZE_MAX);
            StateId s = parseState(line, 1, numStates);
            StateId t = parseState(line, 2, numStates);
            d.rows[s].push_back({t, expr(3)});
        } else if (key == "reward") {
            expectArity(line, 3, SIZE_MAX);
            StateId s = parseState(line, 1, numStates);
            rewards[s] += expr(2);
        } else if (key == "label") {
            parseLabel(line, numStates, d.goal, d.bad);
        } else {
            fail(line, 0, "unknown keyword '" + std::string(key) + "'");
        }
    }
    std::size_t last = lines.back().number;
    if (!numStates) throw ParseError("missing 'states'", last, 1);
    if (!haveInitial) throw ParseError("missing 'initial'", last, 1);
    for (auto& row : d.rows) canonicalizeRow(row);
    if (!rewards.empty()) {
        d.rewards.assign(*numStates, Polynomial());
        for (auto& [s, r] : rewards) d.rewards[s] = r;
    }
    d.validate();
    return d;
}

std::string writePmc(Pmc const& d, std::vector<std::string> const& header) {
    std::ostringstream out;
    writeHeader(out, header);
    out << "pmc\n";
    out << "states " << d.numStates() << '\n';
    out << "initial " << d.initial << '\n';
    out << "params";
    for (auto const& p : d.parameters) out << ' ' << p.name;
    out << '\n';
    for (auto const& g : d.groups) {
        out << "group";
        for (ParamId p : g) out << ' ' << d.parameters.name(p);
        out << '\n';
    }
    for (StateId s = 0; s < d.numStates(); ++s) {
        for (auto const& t : d.rows[s]) out << "trans " << s << ' ' << t.target << ' ' << t.value.toString(&d.parameters) << '\n';
    }
    for (StateId s = 0; s < d.rewards.size(); ++s) {
        if (!d.rewards[s].isZero()) out << "reward " << s << ' ' << d.rewards[s].toString(&d.parameters) << '\n';
    }
    writeLabels(out, d.goal, d.bad);
    return out.str();
}

Instantiation parseInstantiation(std::string_view text, ParameterTable const& params) {
    Instantiation u(params.size());
    for (auto const& line : splitLines(text)) {
        if (line.tokens.size() != 3 || line.tokens[1].text != "=") fail(line, 0, "expected 'name = value'");
        auto id = params.find(std::string(line.tokens[0].text));
        if (!id) fail(line, 0, "unknown parameter '" + std::string(line.tokens[0].text) + "'");
        if (u.has(*id)) fail(line, 0, "parameter assigned twice");
        u.set(*id, parseProbability(line, 2));
    }
    return u;
}

std::string writeInstantiation(Instantiation const& u, ParameterTable const& params) {
    std::ostringstream out;
    for (ParamId p = 0; p < params.size(); ++p) {
        if (u.has(p)) out << params.name(p) << " = " << toString(u.at(p)) << '\n';
    }
    return out.str();
}

std::string readFile(std::filesystem::path const& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open '" + path.string() + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

void writeFile(std::filesystem::path const& path, std::string const& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write '" + path.string() + "'");
    out << content;
}

std::uint64_t fnv1a(std::string_view data) {
    std::uint64_t h = 14695981039346656037ull;
    for (unsigned char c : data) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

std::string hashString(std::string_view data) {
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(fnv1a(data)));
    return buf;
}

}  // namespace fscsynth
