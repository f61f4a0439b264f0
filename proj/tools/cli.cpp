#include "cli.h"

#include <CLI11.hpp>
#include <chrono>
#include <json.hpp>
#include <optional>
#include <ostream>
#include <sstream>

#include "fscsynth/analysis/elimination.h"
#include "fscsynth/analysis/pmc_checker.h"
#include "fscsynth/analysis/region.h"
#include "fscsynth/fsc/fsc.h"
#include "fscsynth/fsc/from_instantiation.h"
#include "fscsynth/models/errors.h"
#include "fscsynth/models/instantiate.h"
#include "fscsynth/models/io.h"
#include "fscsynth/synthesis/oracle.h"
#include "fscsynth/synthesis/permissive.h"
#include "fscsynth/synthesis/pso.h"
#include "fscsynth/transforms/induced.h"
#include "fscsynth/transforms/normalize.h"
#include "fscsynth/transforms/unfold.h"

namespace fscsynth::cli {

namespace {

using nlohmann::json;

class UsageError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

struct Context {
    std::ostream& out;
    std::ostream& err;
    json inputs = json::array();
    json result = json::object();
    std::optional<std::uint64_t> seed;
    std::string outputPath;
};

std::string load(Context& ctx, std::string const& path) {
    auto text = readFile(path);
    ctx.inputs.push_back({{"path", path}, {"fnv1a", hashString(text)}});
    return text;
}

// Writes `content` to `path`, or to standard output when no path was given.
void emit(Context& ctx, std::string const& content, std::string const& path) {
    if (path.empty()) {
        ctx.out << content;
    } else {
        writeFile(path, content);
    }
}

std::string describe(Value<Rational> const& v) { return toString(v); }

json toJson(Value<Rational> const& v) {
    if (v.infinite) return {{"exact", "inf"}, {"decimal", "inf"}};
    return {{"exact", toString(v.value)}, {"decimal", v.value.get_d()}};
}

Rational rationalOption(std::string const& text, char const* flag) {
    try {
        return parseRational(text);
    } catch (std::exception const&) {
        throw UsageError(std::string(flag) + " expects a rational number, got '" + text + "'");
    }
}

// ---- model loading -----------------------------------------------------------

struct ModelOptions {
    std::string pmc;
    std::string pomdp;
    std::size_t memory = 1;
    std::string topology = "full";
    std::string variant;
    bool unfold = false;
    bool makeSimple = false;
};

void addModelOptions(CLI::App* cmd, ModelOptions& o, bool withPmc) {
    if (withPmc) cmd->add_option("--pmc", o.pmc, "pMC input file");
    cmd->add_option("--pomdp", o.pomdp, "POMDP input file");
    cmd->add_option("--memory,-k", o.memory, "Number of memory nodes k")->check(CLI::Range(std::size_t{1}, std::size_t{1000}));
    cmd->add_option("--topology", o.topology, "Memory topology")->check(CLI::IsMember({"full", "counter"}));
    cmd->add_option("--variant", o.variant,
                    "pMC variant (default: standard for k=1, substituted for k>1)")
        ->check(CLI::IsMember({"standard", "substituted", "action-restricted", "next-obs"}));
    cmd->add_flag("--unfold", o.unfold, "Unfold the POMDP k times and induce with one node");
    cmd->add_flag("--make-simple", o.makeSimple, "Normalize to a binary, simple POMDP first");
}

Variant variantOf(ModelOptions const& o) {
    if (o.variant.empty()) return o.memory > 1 && !o.unfold ? Variant::Substituted : Variant::Standard;
    if (o.variant == "standard") return Variant::Standard;
    if (o.variant == "substituted") return Variant::Substituted;
    if (o.variant == "action-restricted") return Variant::ActionRestricted;
    return Variant::NextObservation;
}

char const* variantName(Variant v) {
    switch (v) {
        case Variant::Standard: return "standard";
        case Variant::Substituted: return "substituted";
        case Variant::ActionRestricted: return "action-restricted";
        case Variant::NextObservation: return "next-obs";
    }
    return "";
}

Topology topologyOf(ModelOptions const& o) { return o.topology == "counter" ? Topology::Counter : Topology::Full; }

struct Built {
    Pomdp original;    // POMDP as read (pomdp input only)
    Pomdp pomdp;       // after --make-simple / --unfold
    std::optional<InducedPmc> induced;
    Pmc pmc;
    std::vector<std::string> header;
};

Built build(Context& ctx, ModelOptions const& o) {
    if (o.pmc.empty() == o.pomdp.empty()) throw UsageError("give exactly one of --pmc and --pomdp");
    Built b;
    if (!o.pmc.empty()) {
        if (o.unfold || o.makeSimple) throw UsageError("--unfold and --make-simple apply to POMDP input only");
        b.pmc = parsePmc(load(ctx, o.pmc));
        return b;
    }
    Variant variant = variantOf(o);
    Topology topology = topologyOf(o);
    if (o.unfold && variant == Variant::NextObservation) {
        throw UsageError("--unfold cannot be combined with --variant next-obs: next-observation controllers update "
                         "memory on the successor's observation, which an unfolding cannot see");
    }
    if (o.unfold && topology == Topology::Counter) {
        throw UsageError("--unfold encodes arbitrary memory updates; it cannot be combined with --topology counter");
    }
    auto text = load(ctx, o.pomdp);
    b.original = parsePomdp(text);
    b.pomdp = b.original;
    b.header.push_back("input " + o.pomdp + " fnv1a " + hashString(text));
    if (o.makeSimple) {
        b.pomdp = makeSimple(makeBinary(b.pomdp).pomdp).pomdp;
        b.header.push_back("normalized to a simple POMDP");
    }
    std::size_t k = o.memory;
    if (o.unfold) {
        b.pomdp = unfold(b.pomdp, k).pomdp;
        b.header.push_back("unfolded with " + std::to_string(k) + " memory nodes");
        k = 1;
    }
    b.induced = inducedPmc(b.pomdp, k, topology, variant);
    b.pmc = b.induced->pmc;
    b.header.push_back("induced pMC: memory " + std::to_string(k) + ", topology " + o.topology + ", variant " +
                       variantName(variant));
    return b;
}

std::string parameterTable(InducedPmc const& induced, Pomdp const& m) {
    std::ostringstream s;
    s << "# name role observation node action target\n";
    for (ParamId p = 0; p < induced.info.size(); ++p) {
        auto const& info = induced.info[p];
        char role = info.role == ParamRole::P ? 'p' : info.role == ParamRole::Q ? 'q' : 'r';
        s << induced.pmc.parameters.name(p) << ' ' << role << ' ' << info.observation << ' ' << info.node << ' '
          << (info.action == kAnyAction ? std::string("*") : m.mdp.actions.at(info.action)) << ' ';
        if (info.role == ParamRole::P) {
            s << '-';
        } else {
            s << info.target;
        }
        s << '\n';
    }
    return s.str();
}

// ---- search options ----------------------------------------------------------------

struct SearchOptions {
    SearchConfig config;
    double timeLimit = 0;
};

void addSearchOptions(CLI::App* cmd, SearchOptions& o) {
    cmd->add_option("--seed", o.config.seed, "Random seed");
    cmd->add_option("--swarm", o.config.swarmSize, "Swarm size")->capture_default_str();
    cmd->add_option("--iterations", o.config.maxIterations, "Maximum search iterations")->capture_default_str();
    cmd->add_option("--eps", o.config.epsilon, "Minimum probability of every choice")->capture_default_str();
    cmd->add_option("--time-limit", o.timeLimit, "Time limit in seconds (0: none)")->check(CLI::NonNegativeNumber);
}

SearchConfig searchConfig(SearchOptions const& o, std::size_t threads) {
    auto c = o.config;
    c.threads = threads;
    if (o.timeLimit > 0) {
        c.timeBudget = std::chrono::milliseconds(static_cast<std::int64_t>(o.timeLimit * 1000));
    }
    return c;
}

// ---- commands -------------------------------------------------------------------

struct TransformOptions {
    ModelOptions model;
    std::string emit = "pmc";
};

int transformCommand(Context& ctx, TransformOptions const& o) {
    if (!o.model.pmc.empty()) throw UsageError("transform expects --pomdp");
    auto b = build(ctx, o.model);
    std::vector<std::string> header{"generated by fscsynth transform"};
    header.insert(header.end(), b.header.begin(), b.header.end());
    if (o.emit == "pomdp") {
        emit(ctx, writePomdp(b.pomdp, header), ctx.outputPath);
        ctx.result = {{"states", b.pomdp.numStates()}, {"observations", b.pomdp.numObservations}};
        return kSuccess;
    }
    emit(ctx, writePmc(b.pmc, header), ctx.outputPath);
    if (!ctx.outputPath.empty()) writeFile(ctx.outputPath + ".params", parameterTable(*b.induced, b.pomdp));
    ctx.result = {{"states", b.pmc.numStates()}, {"parameters", b.pmc.parameters.size()}};
    return kSuccess;
}

struct CheckOptions {
    ModelOptions model;
    std::string instantiation;
    std::string fsc;
    std::string spec;
    std::string eps = "1/10000";
    bool useFloat = false;
};

int checkCommand(Context& ctx, CheckOptions const& o) {
    auto spec = parseSpecification(o.spec);
    Rational eps = rationalOption(o.eps, "--eps");
    Value<Rational> value;
    bool floatMode = false;
    Value<double> floatValue;

    if (!o.fsc.empty()) {
        if (o.model.pomdp.empty() || !o.instantiation.empty()) {
            throw UsageError("--fsc needs --pomdp and excludes --instantiation");
        }
        auto m = parsePomdp(load(ctx, o.model.pomdp));
        auto fsc = parseFsc(load(ctx, o.fsc), m);
        fsc.validate(m);
        value = checkMc(inducedMc(m, fsc).mc, spec);
    } else {
        if (o.instantiation.empty()) throw UsageError("check needs --instantiation (or --pomdp with --fsc)");
        auto b = build(ctx, o.model);
        auto u = parseInstantiation(load(ctx, o.instantiation), b.pmc.parameters);
        auto wd = checkWellDefined(b.pmc, u, eps);
        if (!wd.wellDefined) {
            ctx.err << "instantiation is not well-defined\n";
            for (auto const& line : applyInstantiation(b.pmc, u).diagnostics) ctx.err << "  " << line << '\n';
            ctx.result = {{"well_defined", false}};
            return kInputError;
        }
        ctx.out << "graph-preserving: " << (wd.graphPreserving ? "yes" : "no") << '\n';
        ctx.out << "min-eps (" << toString(eps) << "): " << (wd.epsPreserving ? "yes" : "no") << '\n';
        ctx.result["graph_preserving"] = wd.graphPreserving;
        ctx.result["min_eps"] = wd.epsPreserving;
        PmcChecker checker(b.pmc, spec);
        if (o.useFloat) {
            floatMode = true;
            auto values = u.toDouble();
            floatValue = checker.check(std::span<double const>(values));
        } else {
            value = checker.check(u);
        }
    }

    bool ok;
    if (floatMode) {
        ok = satisfies(spec, floatValue);
        ctx.out << "value: " << toString(floatValue) << '\n';
        ctx.result["value"] = floatValue.infinite ? json("inf") : json(floatValue.value);
    } else {
        ok = satisfies(spec, value);
        ctx.out << "value: " << describe(value) << '\n';
        ctx.result["value"] = toJson(value);
    }
    ctx.out << "satisfied: " << (ok ? "yes" : "no") << '\n';
    ctx.result["satisfied"] = ok;
    return ok ? kSuccess : kUnsatisfied;
}

struct SynthesizeOptions {
    ModelOptions model;
    std::string spec;
    std::string method = "pso";
    SearchOptions search;
};

int synthesizeCommand(Context& ctx, SynthesizeOptions const& o, std::size_t threads) {
    if (o.model.pomdp.empty() || !o.model.pmc.empty()) throw UsageError("synthesize expects --pomdp");
    if (o.model.unfold || o.model.makeSimple) throw UsageError("synthesize works on the POMDP as given");
    auto spec = parseSpecification(o.spec);
    auto m = parsePomdp(load(ctx, o.model.pomdp));
    std::size_t k = o.model.memory;

    Fsc fsc;
    bool budgetExhausted = false;
    if (o.method == "brute") {
        if (topologyOf(o.model) != Topology::Full) throw UsageError("--method brute enumerates full-topology controllers");
        auto r = bruteForceOracle(m, k, spec);
        fsc = r.fsc;
        ctx.result["enumerated"] = r.enumerated;
    } else {
        Variant variant = variantOf(o.model);
        if (variant == Variant::NextObservation) {
            throw UsageError("--variant next-obs describes controllers of the POMDP with intermediate states; "
                             "synthesize them with transform and the pMC commands");
        }
        ctx.seed = o.search.config.seed;
        auto induced = inducedPmc(m, k, topologyOf(o.model), variant);
        auto r = psoSearch(induced.pmc, spec, searchConfig(o.search, threads));
        fsc = fscFromInstantiation(m, induced, r.best);
        budgetExhausted = r.budgetExhausted;
        ctx.result["evaluations"] = r.evaluations;
        ctx.result["iterations"] = r.iterations;
    }

    auto value = checkMc(inducedMc(m, fsc).mc, spec);
    bool ok = satisfies(spec, value);
    ctx.result["value"] = toJson(value);
    ctx.result["satisfied"] = ok;
    if (ok) {
        ctx.out << "value: " << describe(value) << '\n' << "satisfied: yes\n";
    } else {
        ctx.out << "best value: " << describe(value) << '\n' << "satisfied: no\n";
        if (!value.infinite) {
            Rational gap = abs(Rational(spec.threshold - value.value));
            ctx.out << "gap to threshold: " << describe({gap}) << '\n';
            ctx.result["gap"] = toJson({gap});
        }
        if (budgetExhausted) ctx.out << "time limit reached\n";
    }
    emit(ctx, writeFsc(fsc, m), ctx.outputPath);
    if (ok) return kSuccess;
    return budgetExhausted ? kBudgetExhausted : kUnsatisfied;
}

struct ClosedFormOptions {
    ModelOptions model;
    std::string spec;
    std::string order = "degree";
};

int closedFormCommand(Context& ctx, ClosedFormOptions const& o) {
    auto spec = parseSpecification(o.spec);
    auto b = build(ctx, o.model);
    auto order = o.order == "forward"   ? EliminationOrder::Forward
                 : o.order == "reverse" ? EliminationOrder::Reverse
                                        : EliminationOrder::Degree;
    auto f = closedForm(b.pmc, spec, order);
    std::string text = f.infinite ? "inf" : f.value.toString(&b.pmc.parameters);
    emit(ctx, text + "\n", ctx.outputPath);
    ctx.result = {{"infinite", f.infinite}, {"terms", f.infinite ? 0 : f.value.termCount()}};
    return kSuccess;
}

struct ProveOptions {
    ModelOptions model;
    std::string spec;
    std::string region;
    std::string eps = "1/10000";
    std::size_t depth = 0;
};

int proveCommand(Context& ctx, ProveOptions const& o) {
    auto spec = parseSpecification(o.spec);
    auto b = build(ctx, o.model);
    Region region = o.region.empty() ? Region::uniform(b.pmc.parameters.size(), rationalOption(o.eps, "--eps"))
                                     : parseRegion(load(ctx, o.region), b.pmc.parameters);
    auto r = proveAbsence(b.pmc, spec, region, o.depth);
    if (r.absent) {
        ctx.out << "verdict: no controller in the region satisfies " << spec.toString() << '\n';
    } else {
        ctx.out << "verdict: inconclusive\n";
    }
    ctx.out << (spec.isLowerBound() ? "upper bound: " : "lower bound: ") << describe(r.bound) << '\n';
    ctx.out << "regions checked: " << r.regionsChecked << '\n';
    ctx.result = {{"absent", r.absent}, {"bound", toJson(r.bound)}, {"regions_checked", r.regionsChecked}};
    return r.absent ? kSuccess : kUnsatisfied;
}

struct PermissiveOptions {
    ModelOptions model;
    std::string spec;
    std::size_t witnesses = 3;
    std::size_t searches = 10;
    SearchOptions search;
};

int permissiveCommand(Context& ctx, PermissiveOptions const& o, std::size_t threads) {
    auto spec = parseSpecification(o.spec);
    auto b = build(ctx, o.model);
    PermissiveConfig c;
    c.search = searchConfig(o.search, threads);
    c.witnesses = o.witnesses;
    c.maxSearches = o.searches;
    ctx.seed = c.search.seed;
    auto r = findPermissive(b.pmc, spec, c);
    ctx.out << "verdict: " << (r.verified ? "verified" : "unverified") << '\n';
    if (r.note.empty() || r.verified) {
        ctx.out << (spec.isLowerBound() ? "lower bound: " : "upper bound: ") << describe(r.bound) << '\n';
    }
    if (!r.note.empty()) ctx.out << "note: " << r.note << '\n';
    ctx.out << "witnesses: " << r.candidate.witnesses.size() << '\n';
    for (auto const& w : r.candidate.witnesses) ctx.out << '\n' << writeInstantiation(w, b.pmc.parameters);
    if (!ctx.outputPath.empty()) {
        writeFile(ctx.outputPath, writeRegion(r.candidate.region, b.pmc.parameters));
    } else {
        ctx.out << '\n' << writeRegion(r.candidate.region, b.pmc.parameters);
    }
    ctx.result = {{"verified", r.verified}, {"witnesses", r.candidate.witnesses.size()}, {"bound", toJson(r.bound)}};
    return r.verified ? kSuccess : kUnsatisfied;
}

struct SimulateOptions {
    std::string pomdp;
    std::string fsc;
    SimulationConfig config;
    bool reachOnly = false;
};

int simulateCommand(Context& ctx, SimulateOptions const& o, std::size_t threads) {
    auto m = parsePomdp(load(ctx, o.pomdp));
    auto fsc = parseFsc(load(ctx, o.fsc), m);
    fsc.validate(m);
    auto c = o.config;
    c.threads = threads;
    c.avoidBad = !o.reachOnly;
    ctx.seed = c.seed;
    auto r = simulate(m, fsc, c);
    ctx.out << "episodes: " << r.episodes << '\n'
            << "reached: " << r.reached << '\n'
            << "truncated: " << r.truncated << '\n'
            << "frequency: " << r.frequency << " +- " << r.standardError << '\n'
            << "mean reward: " << r.meanReward << '\n';
    ctx.result = {{"episodes", r.episodes}, {"reached", r.reached},        {"truncated", r.truncated},
                  {"frequency", r.frequency}, {"standard_error", r.standardError}, {"mean_reward", r.meanReward}};
    return kSuccess;
}

}  // namespace

int run(std::vector<std::string> const& args, std::ostream& out, std::ostream& err) {
    auto start = std::chrono::steady_clock::now();
    CLI::App app{"Finite-state controller synthesis for POMDPs via parametric Markov chains", "fscsynth"};
    app.require_subcommand(1);
    app.set_version_flag("--version", kVersion);
    std::string manifestPath;
    std::size_t threads = 1;
    std::string output;
    app.add_option("--manifest", manifestPath, "Run manifest file (default: <output>.manifest.json, else stderr)");
    app.add_option("--threads", threads, "Maximum worker threads")->check(CLI::PositiveNumber)->capture_default_str();

    auto addOutput = [&](CLI::App* cmd, char const* what) { cmd->add_option("--output,-o", output, what); };

    TransformOptions transform;
    auto* transformCmd = app.add_subcommand("transform", "Build the induced pMC (or transformed POMDP)");
    addModelOptions(transformCmd, transform.model, false);
    transformCmd->add_option("--emit", transform.emit, "Output the induced pMC or the transformed POMDP")
        ->check(CLI::IsMember({"pmc", "pomdp"}));
    addOutput(transformCmd, "Output file; a parameter table is written next to it");

    CheckOptions check;
    auto* checkCmd = app.add_subcommand("check", "Model check an instantiation or a POMDP with an FSC");
    addModelOptions(checkCmd, check.model, true);
    checkCmd->add_option("--instantiation,-u", check.instantiation, "Instantiation file (name = value lines)");
    checkCmd->add_option("--fsc", check.fsc, "Controller file");
    checkCmd->add_option("--spec,-s", check.spec, "Specification")->required();
    checkCmd->add_option("--eps", check.eps, "Threshold of the min-eps report")->capture_default_str();
    checkCmd->add_flag("--float", check.useFloat, "Use floating-point model checking");

    SynthesizeOptions synth;
    auto* synthCmd = app.add_subcommand("synthesize", "Search for a k-FSC satisfying the specification");
    addModelOptions(synthCmd, synth.model, false);
    synthCmd->add_option("--spec,-s", synth.spec, "Specification")->required();
    synthCmd->add_option("--method", synth.method, "Search method")->check(CLI::IsMember({"pso", "brute"}));
    addSearchOptions(synthCmd, synth.search);
    addOutput(synthCmd, "FSC output file");

    ClosedFormOptions closed;
    auto* closedCmd = app.add_subcommand("closed-form", "Rational function of the value by state elimination");
    addModelOptions(closedCmd, closed.model, true);
    closedCmd->add_option("--spec,-s", closed.spec, "Specification (threshold is ignored)")->required();
    closedCmd->add_option("--order", closed.order, "Elimination order")
        ->check(CLI::IsMember({"degree", "forward", "reverse"}));
    addOutput(closedCmd, "Output file");

    ProveOptions prove;
    auto* proveCmd = app.add_subcommand("prove", "Prove that no instantiation in a region satisfies the specification");
    addModelOptions(proveCmd, prove.model, true);
    proveCmd->add_option("--spec,-s", prove.spec, "Specification")->required();
    auto* regionOpt = proveCmd->add_option("--region", prove.region, "Region file (name in [lo, hi] lines)");
    proveCmd->add_option("--eps", prove.eps, "Without --region: every parameter in [eps, 1-eps]")
        ->excludes(regionOpt)
        ->capture_default_str();
    proveCmd->add_option("--depth", prove.depth, "Maximum splitting depth")->capture_default_str();

    PermissiveOptions permissive;
    auto* permissiveCmd = app.add_subcommand("permissive", "Find and verify a region of satisfying instantiations");
    addModelOptions(permissiveCmd, permissive.model, true);
    permissiveCmd->add_option("--spec,-s", permissive.spec, "Specification")->required();
    permissiveCmd->add_option("--witnesses", permissive.witnesses, "Witnesses to collect")->capture_default_str();
    permissiveCmd->add_option("--searches", permissive.searches, "Maximum number of searches")->capture_default_str();
    addSearchOptions(permissiveCmd, permissive.search);
    addOutput(permissiveCmd, "Region output file");

    SimulateOptions sim;
    auto* simCmd = app.add_subcommand("simulate", "Monte-Carlo simulation of a POMDP under an FSC");
    simCmd->add_option("--pomdp", sim.pomdp, "POMDP input file")->required();
    simCmd->add_option("--fsc", sim.fsc, "Controller file")->required();
    simCmd->add_option("--episodes", sim.config.episodes, "Episodes")->capture_default_str();
    simCmd->add_option("--horizon", sim.config.horizon, "Step limit per episode")->capture_default_str();
    simCmd->add_option("--seed", sim.config.seed, "Random seed");
    simCmd->add_flag("--reach-only", sim.reachOnly, "Do not stop at bad states");

    Context ctx{.out = out, .err = err, .seed = std::nullopt, .outputPath = {}};
    int code = kSuccess;
    std::string command;
    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
        command = app.get_subcommands().front()->get_name();
        ctx.outputPath = output;
        if (command == "transform") {
            code = transformCommand(ctx, transform);
        } else if (command == "check") {
            code = checkCommand(ctx, check);
        } else if (command == "synthesize") {
            code = synthesizeCommand(ctx, synth, threads);
        } else if (command == "closed-form") {
            code = closedFormCommand(ctx, closed);
        } else if (command == "prove") {
            code = proveCommand(ctx, prove);
        } else if (command == "permissive") {
            code = permissiveCommand(ctx, permissive, threads);
        } else {
            code = simulateCommand(ctx, sim, threads);
        }
    } catch (CLI::CallForHelp const&) {
        out << app.help();
        return kSuccess;
    } catch (CLI::CallForAllHelp const&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kSuccess;
    } catch (CLI::CallForVersion const&) {
        out << kVersion << '\n';
        return kSuccess;
    } catch (CLI::ParseError const& e) {
        err << "usage error: " << e.what() << '\n';
        return kInputError;
    } catch (UsageError const& e) {
        err << "usage error: " << e.what() << '\n';
        code = kInputError;
        ctx.result = {{"error", e.what()}};
    } catch (std::exception const& e) {
        err << "error: " << e.what() << '\n';
        code = kInputError;
        ctx.result = {{"error", e.what()}};
    }

    auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start);
    json manifest = {
        {"tool", "fscsynth"},
        {"version", kVersion},
        {"command", args},
        {"inputs", ctx.inputs},
        {"seed", ctx.seed ? json(*ctx.seed) : json(nullptr)},
        {"threads", threads},
        {"wall_time_ms", elapsed.count()},
        {"exit_code", code},
        {"result", ctx.result},
    };
    try {
        if (!manifestPath.empty()) {
            writeFile(manifestPath, manifest.dump(2) + "\n");
        } else if (!ctx.outputPath.empty()) {
            writeFile(ctx.outputPath + ".manifest.json", manifest.dump(2) + "\n");
        } else {
            err << "manifest: " << manifest.dump() << '\n';
        }
    } catch (std::exception const& e) {
        err << "error: " << e.what() << '\n';
        return kInputError;
    }
    return code;
}

}  // namespace fscsynth::cli
