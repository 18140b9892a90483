// lforge: exact Euler-factor algebra and archimedean gamma-integral checks
// from one binary. Subcommands:
//
//   lfactor          print the inverse-root blocks and series of one factor
//   series           print the Whittaker zeta series at a Satake point
//   verify nonarch   exact series identities (sweeps, symbolic, or one input)
//   verify arch      quadrature vs closed forms for the gamma-factor chain
//   report           merge emitted JSON reports into one summary
//
// Exit codes: 0 all checks pass, 1 identity or tolerance failure, 2 input
// error, 3 contour or precondition violation. Reports carry no timestamps,
// so a fixed seed and config reproduce them byte for byte.

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "lforge/arch.hpp"
#include "lforge/errors.hpp"
#include "lforge/euler.hpp"
#include "lforge/json_io.hpp"
#include "lforge/prng.hpp"
#include "lforge/satake.hpp"
#include "lforge/series.hpp"
#include "lforge/verify_nonarch.hpp"
#include "lforge/weyl.hpp"
#include "lforge/zeta.hpp"

namespace {

using nlohmann::json;
using namespace lforge;

// ---------------------------------------------------------------------------
// input plumbing

// --input accepts a filesystem path or an inline JSON document. A string that
// parses as no existing file must parse as JSON.
json load_input(const std::string& arg) {
    std::ifstream in(arg);
    std::string text;
    if (in) {
        std::ostringstream buf;
        buf << in.rdbuf();
        text = buf.str();
    } else {
        text = arg;
    }
    json j = json::parse(text, nullptr, false);
    if (j.is_discarded())
        throw InputError("--input is neither a readable file nor valid JSON: " + arg);
    return j;
}

SatakeData satake_input(const std::string& arg) {
    if (arg.empty()) return SatakeData::ones();
    return satake_from_json(load_input(arg));
}

Complex complex_from_json(const json& j, const std::string& what) {
    if (j.is_number()) return Complex(j.get<double>(), 0.0);
    if (j.is_array() && j.size() == 2 && j.at(0).is_number() && j.at(1).is_number())
        return Complex(j.at(0).get<double>(), j.at(1).get<double>());
    throw InputError(what + " must be a number or an [re, im] pair");
}

json complex_to_json(Complex z) { return json::array({z.real(), z.imag()}); }

// ---------------------------------------------------------------------------
// report serialization

json check_to_json(const SeriesCheck& c) {
    json j{{"identity", c.identity},
           {"params", c.params},
           {"order", c.order},
           {"pass", c.pass},
           {"first_mismatch", nullptr}};
    if (c.mismatch) {
        json m{{"lhs", c.mismatch->lhs.str()}, {"rhs", c.mismatch->rhs.str()}};
        if (c.mismatch->degree.second == 0)
            m["degree"] = c.mismatch->degree.first;
        else
            m["degree"] = json::array({c.mismatch->degree.first, c.mismatch->degree.second});
        j["first_mismatch"] = std::move(m);
    }
    return j;
}

json check_to_json(const ArchCheck& c) {
    return json{{"check", c.check},
                {"params", c.params},
                {"lhs", complex_to_json(c.lhs)},
                {"rhs", complex_to_json(c.rhs)},
                {"rel_err", c.rel_err},
                {"pass", c.pass}};
}

void print_check_line(const SeriesCheck& c) {
    std::cout << (c.pass ? "PASS" : "FAIL") << "  " << c.identity << "  N=" << c.order
              << "  " << c.params;
    if (c.mismatch) {
        std::cout << "  mismatch at degree (" << c.mismatch->degree.first << ","
                  << c.mismatch->degree.second << ")";
    }
    std::cout << "\n";
}

void print_check_line(const ArchCheck& c) {
    std::cout << (c.pass ? "PASS" : "FAIL") << "  " << c.check << "  " << c.params
              << "  rel_err=" << format_real(c.rel_err) << "\n";
}

// ---------------------------------------------------------------------------
// lfactor

struct FactorOpts {
    std::string which = "wedge2_std2";
    std::string place = "split";
    std::string input;
    int order = TruncatedSeries::kDefaultOrderT;
    bool json_out = false;
};

EulerFactor build_factor(const std::string& which, PlaceType place, const SatakeData& data) {
    if (which == "wedge2_std2") {
        return place == PlaceType::Split
                   ? lfactor_wedge2_std2_split(data.need_gl4(), data.need_gl2())
                   : lfactor_wedge2_std2_inert(data.need_gsp4(), data.need_gl2());
    }
    if (which == "sym2") {
        const LaurentPoly twist = place == PlaceType::Split ? data.need_gl4().central()
                                                            : data.need_gsp4().central();
        return lfactor_sym2(data.need_gl2(), twist);
    }
    if (which == "std4") return lfactor_std4(data.need_gl4());
    if (which == "tensor8") return lfactor_tensor_gsp4_gl2(data.need_gsp4(), data.need_gl2());
    throw InputError("--which must be one of wedge2_std2, sym2, std4, tensor8");
}

std::string block_group_str(const EulerBlock& b, const std::string& var, int count) {
    std::ostringstream os;
    os << "(1-";
    if (!(b.lambda - LaurentPoly::one()).is_zero()) {
        const bool wrap = !b.lambda.is_monomial();
        os << (wrap ? "(" : "") << b.lambda.str() << (wrap ? ")" : "") << "*";
    }
    os << var;
    if (b.degree != 1) os << "^" << b.degree;
    os << ")^-" << count;
    return os.str();
}

int run_lfactor(const FactorOpts& o) {
    const PlaceType place = place_from_string(o.place);
    const SatakeData data = satake_input(o.input);
    if (o.order < 0) throw InputError("--order must be nonnegative");
    const EulerFactor f = build_factor(o.which, place, data);
    const TruncatedSeries series = f.expand(o.order);

    if (o.json_out) {
        json blocks = json::array();
        for (const auto& b : f.blocks)
            blocks.push_back(json{{"lambda", poly_to_json(b.lambda)}, {"degree", b.degree}});
        json out{{"command", "lfactor"},
                 {"which", o.which},
                 {"place", place_to_string(place)},
                 {"label", f.label},
                 {"variable", f.var},
                 {"degree", f.degree()},
                 {"blocks", std::move(blocks)},
                 {"series", series_to_json(series)}};
        std::cout << out.dump(2) << "\n";
        return 0;
    }

    const bool place_matters = o.which == "wedge2_std2" || o.which == "sym2";
    std::cout << "factor: " << f.label << " (" << o.which
              << (place_matters ? ", " + place_to_string(place) : std::string()) << ")\n";
    std::cout << "degree: " << f.degree() << " in " << f.var << "\n";
    // Group identical blocks, preserving first-appearance order.
    std::cout << "blocks: ";
    std::vector<std::pair<std::string, int>> groups;
    for (const auto& b : f.blocks) {
        const std::string key = b.lambda.str() + "|" + std::to_string(b.degree);
        bool found = false;
        for (std::size_t g = 0; g < groups.size(); ++g) {
            if (groups[g].first == key) {
                ++groups[g].second;
                found = true;
                break;
            }
        }
        if (!found) groups.emplace_back(key, 1);
    }
    bool first = true;
    for (const auto& [key, count] : groups) {
        for (const auto& b : f.blocks) {
            if (key == b.lambda.str() + "|" + std::to_string(b.degree)) {
                if (!first) std::cout << " * ";
                first = false;
                std::cout << block_group_str(b, f.var, count);
                break;
            }
        }
    }
    if (f.blocks.empty()) std::cout << "1";
    std::cout << "\n";
    std::cout << "series: " << series.str() << "\n";
    return 0;
}

// ---------------------------------------------------------------------------
// series

struct SeriesOpts {
    std::string place = "split";
    std::string input;
    int order = TruncatedSeries::kDefaultOrderT;
    bool json_out = false;
};

int run_series(const SeriesOpts& o) {
    const PlaceType place = place_from_string(o.place);
    const SatakeData data = satake_input(o.input);
    if (o.order < 0) throw InputError("--order must be nonnegative");
    ZetaSeriesConfig cfg;
    cfg.order_t = o.order;
    cfg.order_u = 0;
    const TruncatedSeries z = zeta_series(place, data, cfg);
    if (o.json_out) {
        json out{{"command", "series"},
                 {"place", place_to_string(place)},
                 {"order", o.order},
                 {"series", series_to_json(z)}};
        std::cout << out.dump(2) << "\n";
        return 0;
    }
    std::cout << "zeta series (" << place_to_string(place) << ", order " << o.order
              << "):\n" << z.str() << "\n";
    return 0;
}

// ---------------------------------------------------------------------------
// verify nonarch

struct NonarchOpts {
    std::string place;  // empty = both
    std::string input;  // empty = sweeps (or symbolic)
    int order = TruncatedSeries::kDefaultOrderT;
    int sweeps = 50;
    std::uint64_t seed = 0;
    bool symbolic = false;
    bool mutate = false;
    bool json_out = false;
};

void append(std::vector<SeriesCheck>& all, std::vector<SeriesCheck> more) {
    for (auto& c : more) all.push_back(std::move(c));
}

// Aggregated exact branching check over the dominant box; one report entry.
SeriesCheck branching_box_check(int bound) {
    SeriesCheck out;
    out.identity = "u3_u2_branching";
    out.order = 0;
    int cases = 0;
    for (int l1 = bound; l1 >= -bound; --l1)
        for (int l2 = l1; l2 >= -bound; --l2)
            for (int l3 = l2; l3 >= -bound; --l3) {
                ++cases;
                LaurentPoly diff;
                if (verify_branching({l1, l2, l3}, &diff)) continue;
                out.pass = false;
                if (!out.mismatch) {
                    out.mismatch = SeriesMismatch{{0, 0}, diff, LaurentPoly::zero()};
                    out.params = "first failure at lambda=(" + std::to_string(l1) + "," +
                                 std::to_string(l2) + "," + std::to_string(l3) + ")";
                }
            }
    if (out.pass)
        out.params = "lambda dominant in [-" + std::to_string(bound) + "," +
                     std::to_string(bound) + "]^3, " + std::to_string(cases) + " cases";
    return out;
}

int run_verify_nonarch(const NonarchOpts& o) {
    if (o.order < 1) throw InputError("--order must be at least 1");
    if (o.sweeps < 1) throw InputError("--sweeps must be at least 1");
    const bool do_split = o.place.empty() || o.place == "split";
    const bool do_inert = o.place.empty() || o.place == "inert";
    if (!do_split && !do_inert)
        throw InputError("--place must be split or inert");
    const MutationFlag mut{o.mutate};
    const ZetaSeriesConfig two_var_cfg{o.order, std::max(2, o.order / 2), true};

    std::vector<SeriesCheck> checks;
    std::string mode;

    if (!o.input.empty()) {
        mode = "input";
        const SatakeData data = satake_input(o.input);
        bool ran = false;
        if (do_split && data.gl4 && data.gl2) {
            checks.push_back(verify_split(*data.gl4, *data.gl2, o.order, mut));
            append(checks, verify_separation_split(*data.gl4, *data.gl2, 5, mut));
            append(checks, verify_two_variable(*data.gl4, *data.gl2, two_var_cfg, mut));
            ran = true;
        }
        if (do_inert && data.gsp4 && data.gl2) {
            append(checks, verify_inert(*data.gsp4, *data.gl2, o.order, mut));
            append(checks, verify_sym_alg_fact(*data.gsp4, *data.gl2, 6, mut));
            ran = true;
        }
        if (do_split) checks.push_back(branching_box_check(3));
        if (!ran)
            throw InputError("input has no section pair usable for the requested place");
    } else if (o.symbolic) {
        mode = "symbolic";
        const SatakeGL2 s2 = SatakeGL2::symbolic();
        if (do_split) {
            const SatakeGL4 s4 = SatakeGL4::symbolic();
            checks.push_back(verify_split(s4, s2, o.order, mut));
            append(checks, verify_separation_split(s4, s2, 5, mut));
            const ZetaSeriesConfig sym_cfg{std::min(o.order, 4), 2, true};
            append(checks, verify_two_variable(s4, s2, sym_cfg, mut));
            checks.push_back(branching_box_check(3));
        }
        if (do_inert) {
            const SatakeGSp4 c = SatakeGSp4::symbolic();
            append(checks, verify_inert(c, s2, o.order, mut));
            append(checks, verify_sym_alg_fact(c, s2, 6, mut));
        }
    } else {
        mode = "sweep";
        if (do_split) {
            if (o.mutate) {
                SplitMix64 root(o.seed);
                for (int i = 0; i < o.sweeps; ++i) {
                    SplitMix64 child = root.split();
                    const SatakeGL4 s4 = random_gl4(child);
                    const SatakeGL2 s2 = random_gl2(child);
                    checks.push_back(verify_split(s4, s2, o.order, mut));
                }
            } else {
                append(checks, sweep_split(o.sweeps, o.order, o.seed));
            }
            SplitMix64 root(o.seed);
            for (int i = 0; i < o.sweeps; ++i) {
                SplitMix64 child = root.split();
                const SatakeGL4 s4 = random_gl4(child);
                const SatakeGL2 s2 = random_gl2(child);
                append(checks, verify_separation_split(s4, s2, 5, mut));
                append(checks, verify_two_variable(s4, s2, two_var_cfg, mut));
            }
            checks.push_back(branching_box_check(3));
        }
        if (do_inert) {
            if (o.mutate) {
                SplitMix64 root(o.seed);
                for (int i = 0; i < o.sweeps; ++i) {
                    SplitMix64 child = root.split();
                    const SatakeGSp4 c = random_gsp4(child);
                    const SatakeGL2 s2 = random_gl2(child);
                    append(checks, verify_inert(c, s2, o.order, mut));
                }
            } else {
                append(checks, sweep_inert(o.sweeps, o.order, o.seed));
            }
            SplitMix64 root(o.seed);
            for (int i = 0; i < o.sweeps; ++i) {
                SplitMix64 child = root.split();
                const SatakeGSp4 c = random_gsp4(child);
                const SatakeGL2 s2 = random_gl2(child);
                append(checks, verify_sym_alg_fact(c, s2, 6, mut));
            }
        }
    }

    int failed = 0;
    for (const auto& c : checks)
        if (!c.pass) ++failed;

    if (o.json_out) {
        json arr = json::array();
        for (const auto& c : checks) arr.push_back(check_to_json(c));
        json out{{"command", "verify nonarch"},
                 {"mode", mode},
                 {"place", o.place.empty() ? "all" : o.place},
                 {"order", o.order},
                 {"sweeps", o.sweeps},
                 {"seed", o.seed},
                 {"mutate", o.mutate},
                 {"total", checks.size()},
                 {"failed", failed},
                 {"pass", failed == 0},
                 {"checks", std::move(arr)}};
        std::cout << out.dump(2) << "\n";
    } else {
        for (const auto& c : checks) print_check_line(c);
        std::cout << "nonarch (" << mode << "): " << (checks.size() - failed) << "/"
                  << checks.size() << " checks passed\n";
    }
    return failed == 0 ? 0 : 1;
}

// ---------------------------------------------------------------------------
// verify arch

struct ArchOpts {
    std::string stage = "after_barnes1";
    std::string input;
    int sweeps = 20;
    std::uint64_t seed = 0;
    double tolerance = 0.0;  // 0 = per-check defaults
    bool json_out = false;
};

void append_arch(std::vector<ArchCheck>& all, std::vector<ArchCheck> more) {
    for (auto& c : more) all.push_back(std::move(c));
}

int run_verify_arch(const ArchOpts& o) {
    if (o.sweeps < 1) throw InputError("--sweeps must be at least 1");
    const ZetaStage stage = stage_from_string(o.stage);
    const auto tol = [&](double dflt) { return o.tolerance > 0.0 ? o.tolerance : dflt; };

    std::vector<ArchCheck> checks;

    if (!o.input.empty()) {
        // One zeta-ratio check at user-supplied spectral parameters, with
        // optional grid overrides.
        const json j = load_input(o.input);
        ArchParams p = arch_params_trivial(ArchField::R);
        if (j.contains("field")) p.field = field_from_string(j.at("field").get<std::string>());
        if (j.contains("mu")) {
            if (!j.at("mu").is_array() || j.at("mu").size() != 4)
                throw InputError("\"mu\" must be an array of four entries");
            for (int i = 0; i < 4; ++i)
                p.mu[static_cast<std::size_t>(i)] =
                    complex_from_json(j.at("mu").at(i), "mu[" + std::to_string(i) + "]");
        }
        if (j.contains("nu0")) p.nu0 = complex_from_json(j.at("nu0"), "nu0");
        if (j.contains("nu1")) p.nu1 = complex_from_json(j.at("nu1"), "nu1");
        Complex s{1.0, 0.0};
        if (j.contains("s")) s = complex_from_json(j.at("s"), "s");
        QuadratureSpec spec = stage_spec(stage);
        if (j.contains("T")) spec.height = j.at("T").get<double>();
        if (j.contains("nodes")) spec.nodes = j.at("nodes").get<int>();
        const double dflt = stage == ZetaStage::Full ? 1e-3 : 1e-6;
        checks.push_back(arch_zeta_verify(p, s, stage, spec, tol(dflt)));
    } else {
        checks.push_back(gamma_reflection_report(100, o.seed, tol(1e-12)));
        checks.push_back(gamma_duplication_report(100, o.seed, tol(1e-12)));
        const QuadratureSpec line{};
        for (ArchField f : {ArchField::R, ArchField::C}) {
            append_arch(checks, sweep_barnes1(o.sweeps, f, o.seed, line, tol(1e-8)));
            append_arch(checks, sweep_barnes2(o.sweeps, f, o.seed, line, tol(1e-8)));
            append_arch(checks, sweep_stade(o.sweeps, f, o.seed, line, tol(1e-8)));
            checks.push_back(stade_fixed_point(o.seed, f, line, tol(1e-12)));
        }
        const QuadratureSpec spec2 = stage_spec(ZetaStage::AfterBarnes1);
        checks.push_back(arch_zeta_verify(arch_params_trivial(ArchField::R), {1.0, 0.0},
                                          ZetaStage::AfterBarnes1, spec2, tol(1e-6)));
        checks.push_back(arch_zeta_verify(arch_params_generic(ArchField::R), {1.0, 0.0},
                                          ZetaStage::AfterBarnes1, spec2, tol(1e-6)));
        if (stage == ZetaStage::Full) {
            checks.push_back(arch_zeta_verify(arch_params_trivial(ArchField::R), {1.0, 0.0},
                                              ZetaStage::Full, stage_spec(ZetaStage::Full),
                                              tol(1e-3)));
        }
    }

    int failed = 0;
    for (const auto& c : checks)
        if (!c.pass) ++failed;

    if (o.json_out) {
        json arr = json::array();
        for (const auto& c : checks) arr.push_back(check_to_json(c));
        json out{{"command", "verify arch"},
                 {"stage", stage_name(stage)},
                 {"sweeps", o.sweeps},
                 {"seed", o.seed},
                 {"tolerance", o.tolerance > 0.0 ? json(o.tolerance) : json(nullptr)},
                 {"total", checks.size()},
                 {"failed", failed},
                 {"pass", failed == 0},
                 {"checks", std::move(arr)}};
        std::cout << out.dump(2) << "\n";
    } else {
        for (const auto& c : checks) print_check_line(c);
        std::cout << "arch (" << stage_name(stage) << "): " << (checks.size() - failed)
                  << "/" << checks.size() << " checks passed\n";
    }
    return failed == 0 ? 0 : 1;
}

// ---------------------------------------------------------------------------
// report

struct ReportOpts {
    std::vector<std::string> paths;
    bool json_out = false;
};

bool valid_nonarch_check(const json& c) {
    return c.is_object() && c.contains("identity") && c.at("identity").is_string() &&
           c.contains("params") && c.contains("order") && c.contains("pass") &&
           c.at("pass").is_boolean();
}

bool valid_arch_check(const json& c) {
    return c.is_object() && c.contains("check") && c.at("check").is_string() &&
           c.contains("params") && c.contains("rel_err") && c.contains("pass") &&
           c.at("pass").is_boolean();
}

int run_report(const ReportOpts& o) {
    json merged = json::array();
    int failed = 0;
    for (const auto& path : o.paths) {
        std::ifstream in(path);
        if (!in) throw InputError("cannot open report file: " + path);
        json doc = json::parse(in, nullptr, false);
        if (doc.is_discarded()) throw InputError("report file is not valid JSON: " + path);
        if (!doc.is_object() || !doc.contains("checks") || !doc.at("checks").is_array())
            throw InputError("report file lacks a \"checks\" array: " + path);
        for (const auto& c : doc.at("checks")) {
            if (!valid_nonarch_check(c) && !valid_arch_check(c))
                throw InputError("unrecognized check schema in: " + path);
            json entry = c;
            entry["source"] = path;
            if (!c.at("pass").get<bool>()) ++failed;
            merged.push_back(std::move(entry));
        }
    }

    const std::size_t total = merged.size();
    json out{{"command", "report"},
             {"sources", o.paths.size()},
             {"total", total},
             {"failed", failed},
             {"pass", failed == 0},
             {"checks", std::move(merged)}};

    if (!o.json_out) {
        for (const auto& c : out.at("checks")) {
            const std::string name = c.contains("identity")
                                         ? c.at("identity").get<std::string>()
                                         : c.at("check").get<std::string>();
            std::cout << (c.at("pass").get<bool>() ? "PASS" : "FAIL") << "  " << name
                      << "  " << c.at("params").get<std::string>() << "\n";
        }
        std::cout << "report: " << o.paths.size() << " files, " << total << " checks, "
                  << failed << " failed\n";
    }
    std::cout << out.dump(2) << "\n";
    return failed == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact and numerical checks for a rank-eight local L-factor chain"};
    app.require_subcommand(1);

    FactorOpts fo;
    auto* lf = app.add_subcommand("lfactor", "print inverse-root blocks and series");
    lf->add_option("--which", fo.which, "wedge2_std2, sym2, std4, or tensor8");
    lf->add_option("--place", fo.place, "split or inert");
    lf->add_option("--input", fo.input, "Satake JSON (path or inline)");
    lf->add_option("--order", fo.order, "series truncation order");
    lf->add_flag("--json", fo.json_out, "emit JSON");

    SeriesOpts so;
    auto* se = app.add_subcommand("series", "print the Whittaker zeta series");
    se->add_option("--place", so.place, "split or inert");
    se->add_option("--input", so.input, "Satake JSON (path or inline)");
    se->add_option("--order", so.order, "series truncation order");
    se->add_flag("--json", so.json_out, "emit JSON");

    auto* ve = app.add_subcommand("verify", "run a verification suite");
    ve->require_subcommand(1);

    NonarchOpts no;
    auto* vn = ve->add_subcommand("nonarch", "exact series identities");
    vn->add_option("--place", no.place, "restrict to split or inert");
    vn->add_option("--input", no.input, "Satake JSON for a single-point run");
    vn->add_option("--order", no.order, "series truncation order");
    vn->add_option("--sweeps", no.sweeps, "random draws per family");
    vn->add_option("--seed", no.seed, "sweep seed");
    vn->add_flag("--symbolic", no.symbolic, "fully symbolic identities");
    vn->add_flag("--mutate", no.mutate, "corrupt references; run must fail");
    vn->add_flag("--json", no.json_out, "emit JSON report");

    ArchOpts ao;
    auto* va = ve->add_subcommand("arch", "gamma-integral quadrature checks");
    va->add_option("--stage", ao.stage, "after_barnes1 or full");
    va->add_option("--input", ao.input, "spectral-parameter JSON for a single check");
    va->add_option("--sweeps", ao.sweeps, "random draws per lemma and field");
    va->add_option("--seed", ao.seed, "sweep seed");
    va->add_option("--tolerance", ao.tolerance, "override all pass tolerances");
    va->add_flag("--json", ao.json_out, "emit JSON report");

    ReportOpts ro;
    auto* re = app.add_subcommand("report", "merge JSON reports");
    re->add_option("files", ro.paths, "report files to merge");
    re->add_flag("--json", ro.json_out, "emit merged JSON only");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (*lf) return run_lfactor(fo);
        if (*se) return run_series(so);
        if (*vn) return run_verify_nonarch(no);
        if (*va) return run_verify_arch(ao);
        if (*re) return run_report(ro);
    } catch (const ContourViolation& e) {
        std::cerr << "contour violation: " << e.what() << "\n";
        return 3;
    } catch (const BalanceViolation& e) {
        std::cerr << "balance violation: " << e.what() << "\n";
        return 3;
    } catch (const CentralCharacterViolation& e) {
        std::cerr << "central character violation: " << e.what() << "\n";
        return 3;
    } catch (const NonConvergence& e) {
        std::cerr << "quadrature did not converge: " << e.what() << "\n";
        return 3;
    } catch (const InputError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
