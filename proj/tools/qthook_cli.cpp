// qthook: batch front end for the hook-formula checks.
//   verify hook|identity|all, show poset|hooks
// Exit status: 0 pass, 1 a check failed, 2 usage error.
#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <stdexcept>
#include <string>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "qthook/acceptance.hpp"
#include "qthook/dposet.hpp"
#include "qthook/hookformula.hpp"

using namespace qthook;

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct RunConfig {
    std::string family;
    std::string alpha;
    std::string beta;
    int f = 0;
    int degree = 3;
    std::string mode = "exact";
    int points = 3;
    std::optional<std::uint64_t> seed;
    int trials = 0;
    std::string name;
    std::string profile = "desk";
    std::string format = "json";
    std::string out;
};

std::uint64_t resolveSeed(const RunConfig& c) {
    if (c.seed) return *c.seed;
    if (const char* s = std::getenv("QTHOOK_SEED")) {
        try {
            return std::stoull(s);
        } catch (const std::exception&) {
            throw UsageError(std::string("QTHOOK_SEED is not an unsigned integer: ") + s);
        }
    }
    return 42;
}

// Written to a sibling temp file, then renamed into place.
void emit(const RunConfig& c, const std::string& text) {
    if (c.out.empty() || c.out == "-") {
        std::cout << text;
        return;
    }
    std::filesystem::path target(c.out);
    auto tmp = target;
    tmp += ".tmp";
    {
        std::ofstream os(tmp);
        if (!os) throw std::runtime_error("cannot write " + tmp.string());
        os << text;
    }
    std::filesystem::rename(tmp, target);
}

ColoredPoset buildPoset(const RunConfig& c) {
    if (c.family.empty()) throw UsageError("--family is required");
    FamilyParams p;
    try {
        p.family = parseFamily(c.family);
        p.alpha = Partition::parse(c.alpha);
        p.beta = Partition::parse(c.beta);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
    p.f = c.f;
    if (p.family == Family::Custom) throw UsageError("family must be shifted, bird or banner");
    if (p.family == Family::Bird && p.alpha.length() != 2) throw UsageError("bird: alpha must have length 2");
    if (p.family == Family::Bird && p.beta.length() != 2) throw UsageError("bird: beta must have length 2");
    if (p.family == Family::Banner && p.alpha.length() != 4) throw UsageError("banner: alpha must have length 4");
    if (p.family != Family::Shifted && p.f < 1) throw UsageError("--f is required for birds and banners");
    try {
        return buildFamily(p);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
}

int verifyHook(const RunConfig& c) {
    auto P = buildPoset(c);
    if (c.degree < 0) throw UsageError("--degree must be nonnegative");
    Mode mode;
    if (c.mode == "exact") mode = Mode::Exact;
    else if (c.mode == "eval") mode = Mode::Eval;
    else throw UsageError("--mode must be exact or eval");
    if (mode == Mode::Eval && c.points < 1) throw UsageError("--points must be positive");
    auto points = mode == Mode::Eval ? samplePoints(resolveSeed(c), c.points) : std::vector<EvalPoint>{};
    auto rep = verifyOkada(P, c.degree, mode, points);
    rep.degree = c.degree;
    emit(c, rep.toJson().dump(2) + "\n");
    return rep.pass ? 0 : 1;
}

int verifyIdentity(const RunConfig& c) {
    const auto& names = identityNames();
    if (std::find(names.begin(), names.end(), c.name) == names.end())
        throw UsageError("unknown identity '" + c.name + "'");
    auto seed = resolveSeed(c);
    auto rep = identitySweep(c.name, seed, c.trials);
    auto j = rep.toJson();
    j["seed"] = seed;
    emit(c, j.dump(2) + "\n");
    return rep.pass ? 0 : 1;
}

int verifyAll(const RunConfig& c) {
    if (c.profile != "desk") throw UsageError("unknown profile '" + c.profile + "'");
    SuiteOptions opts{resolveSeed(c), c.profile};
    nlohmann::json all;
    all["schemaVersion"] = kReportSchemaVersion;
    all["profile"] = c.profile;
    all["seed"] = opts.seed;
    all["criteria"] = nlohmann::json::array();
    bool ok = true;
    for (int id = 1; id <= kCriterionCount; ++id) {
        auto r = runCriterion(id, opts);
        std::cerr << r.line() << std::endl;
        ok = ok && r.pass;
        all["criteria"].push_back(r.toJson());
    }
    all["result"] = ok ? "pass" : "fail";
    emit(c, all.dump(2) + "\n");
    return ok ? 0 : 1;
}

// The closed forms come as a multiset, so agreement is decided on sorted lists.
nlohmann::json hooksJson(const ColoredPoset& P) {
    auto rec = hookMonomials(P);
    auto closed = hookMonomialsClosedForm(P);
    std::sort(closed.begin(), closed.end());
    auto check = hookAgreementCheck(P);
    nlohmann::json j;
    j["schemaVersion"] = kReportSchemaVersion;
    j["family"] = familyName(P.params().family);
    j["params"] = P.params().toJson();
    j["hooks"] = nlohmann::json::array();
    for (int x = 0; x < P.size(); ++x)
        j["hooks"].push_back(
            {{"element", P.label(x)}, {"color", P.color(x).name()}, {"recursive", P.vars()->format(rec[x])}});
    j["closedForm"] = nlohmann::json::array();
    for (const auto& e : closed) j["closedForm"].push_back(P.vars()->format(e));
    j["agreement"] = check.pass;
    if (check.mismatch)
        j["mismatch"] = {{"what", check.mismatch->monomial}, {"recursive", check.mismatch->lhs},
                         {"closedForm", check.mismatch->rhs}};
    return j;
}

int show(const RunConfig& c, const std::string& what) {
    auto P = buildPoset(c);
    if (c.format != "dot" && c.format != "json") throw UsageError("--format must be dot or json");
    if (what == "poset") {
        if (c.format == "dot") {
            emit(c, toDot(P));
        } else {
            auto j = toJson(P);
            j["schemaVersion"] = kReportSchemaVersion;
            emit(c, j.dump(2) + "\n");
        }
        return 0;
    }
    if (c.format == "dot") {
        emit(c, toDot(P));
        return 0;
    }
    auto j = hooksJson(P);
    emit(c, j.dump(2) + "\n");
    return j["agreement"].get<bool>() ? 0 : 1;
}

void familyFlags(CLI::App* sub, RunConfig& c) {
    sub->add_option("--family", c.family, "shifted | bird | banner");
    sub->add_option("--alpha", c.alpha, "partition, e.g. 4,3,1");
    sub->add_option("--beta", c.beta, "second partition (birds)");
    sub->add_option("--f", c.f, "number of tail colors (birds, banners)");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Verification front end for the (q,t)-hook formula"};
    app.require_subcommand(1);
    RunConfig c;

    auto* verify = app.add_subcommand("verify", "run a check and write a JSON report");
    verify->require_subcommand(1);
    auto* hook = verify->add_subcommand("hook", "the hook formula on one poset");
    familyFlags(hook, c);
    hook->add_option("--degree", c.degree, "truncation degree D");
    hook->add_option("--mode", c.mode, "exact | eval");
    hook->add_option("--points", c.points, "evaluation points in eval mode");
    auto* identity = verify->add_subcommand("identity", "a named identity over its default ranges");
    identity->add_option("--name", c.name, "identity name")->required();
    identity->add_option("--trials", c.trials, "random draws (gasper)");
    auto* all = verify->add_subcommand("all", "the acceptance suite");
    all->add_option("--profile", c.profile, "suite profile");
    for (auto* s : {hook, identity, all}) {
        s->add_option("--seed", c.seed, "seed (default: QTHOOK_SEED, then 42)");
        s->add_option("--out", c.out, "output file (default stdout)");
    }

    auto* showCmd = app.add_subcommand("show", "dump a poset or its hooks");
    showCmd->require_subcommand(1);
    std::string what;
    for (const char* w : {"poset", "hooks"}) {
        auto* s = showCmd->add_subcommand(w, std::string("dump the ") + w);
        familyFlags(s, c);
        s->add_option("--format", c.format, "dot | json");
        s->add_option("--out", c.out, "output file (default stdout)");
        s->callback([&what, w] { what = w; });
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (hook->parsed()) return verifyHook(c);
        if (identity->parsed()) return verifyIdentity(c);
        if (all->parsed()) return verifyAll(c);
        return show(c, what);
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
