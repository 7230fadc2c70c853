#include "klein4/cli.hpp"

#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "klein4/casson.hpp"
#include "klein4/klein_count.hpp"
#include "klein4/oracle.hpp"
#include "klein4/ring_spec.hpp"
#include "klein4/verify.hpp"

namespace k4::cli {

namespace {

using nlohmann::json;

constexpr int kVtableGuardDim = 20;

struct Options {
    std::string spec_path;
    std::string spec_path2;
    bool json_out = false;
    bool no_strict = false;
    bool override_cap = false;
    bool family = false;
    std::string x_bits;
    std::string x_square_of;
    std::uint64_t seed = 1;
    int count = 100;
    int threads = 0;
    int total_b = 0;
};

ParsedRing load_spec(const std::string& path, const Options& opt, std::ostream& err) {
    json spec;
    if (path == "-") {
        spec = json::parse(std::cin);
    } else {
        std::ifstream in(path);
        if (!in) throw SpecError("cannot open \"" + path + "\"");
        spec = json::parse(in);
    }
    ParsedRing parsed = ring_from_spec(spec, !opt.no_strict);
    if (opt.no_strict && !parsed.ring.postnikov_ok())
        err << "warning: tensor violates u(i,i,j) = u(j,j,i); "
               "no closed oriented 3-manifold realizes this ring\n";
    return parsed;
}

H2Class class_arg(const CupRing& r, const Options& opt) {
    if (!opt.x_bits.empty() && !opt.x_square_of.empty())
        throw SpecError("--x and --x-square-of are mutually exclusive");
    if (!opt.x_bits.empty()) return H2Class(BitVec::parse(opt.x_bits, r.dim()));
    if (!opt.x_square_of.empty()) return r.square(BitVec::parse(opt.x_square_of, r.dim()));
    throw SpecError("a class is required: pass --x <bits> or --x-square-of <bits>");
}

// "a1+a3" style display of a degree-1 class over generators named a1..an.
std::string class_name(BitVec v) {
    if (v.is_zero()) return "0";
    std::string s;
    for (int i = 0; i < v.dim; ++i)
        if (v.bit(i)) {
            if (!s.empty()) s += "+";
            s += "a" + std::to_string(i + 1);
        }
    return s;
}

int cmd_info(const Options& opt, std::ostream& out, std::ostream& err) {
    const ParsedRing parsed = load_spec(opt.spec_path, opt, err);
    const CupRing& r = parsed.ring;
    const int k = r.k_invariant();

    json basis = json::array();
    for (const H2Class& x : r.square_image_basis()) basis.push_back(x.to_string());

    if (opt.json_out) {
        json j{{"schema", "info/1"},
               {"type", parsed.type},
               {"dim", r.dim()},
               {"k", k},
               {"total_klein_classes", total_count(r.dim())},
               {"admissible_count", count_admissible(r)},
               {"square_image_basis", basis}};
        if (parsed.cover)
            j["cover"] = {{"components", parsed.cover->components()},
                          {"relation", "a1+...+a" + std::to_string(parsed.cover->components()) +
                                           " = 0"}};
        if (parsed.seifert) j["seifert_parity"] = seifert_parity(*parsed.seifert);
        out << j.dump() << "\n";
        return kExitOk;
    }

    out << "type:                  " << parsed.type << "\n";
    out << "dim b1(2):             " << r.dim() << "\n";
    out << "k(Y):                  " << k << "\n";
    out << "total Klein-4 classes: " << total_count(r.dim()) << "\n";
    out << "admissible classes:    " << count_admissible(r) << "\n";
    out << "square image basis:   ";
    if (basis.empty()) out << " (trivial)";
    for (const auto& b : basis) out << " " << b.get<std::string>();
    out << "\n";
    if (parsed.cover)
        out << "cover generators:      a1..a" << parsed.cover->components() << " with a1+...+a"
            << parsed.cover->components() << " = 0; basis a1..a"
            << parsed.cover->components() - 1 << "\n";
    if (parsed.seifert)
        out << "fibered parity:        " << seifert_parity(*parsed.seifert)
            << " (v at non-squares mod 2)\n";
    return kExitOk;
}

int cmd_vtable(const Options& opt, std::ostream& out, std::ostream& err) {
    const ParsedRing parsed = load_spec(opt.spec_path, opt, err);
    const CupRing& r = parsed.ring;
    if (r.dim() > kVtableGuardDim) {
        if (!opt.override_cap)
            throw SpecError("dim " + std::to_string(r.dim()) + " exceeds the vtable guard (" +
                            std::to_string(kVtableGuardDim) + "); pass --override-cap to force");
        err << "warning: the table scan is 4^" << r.dim()
            << " ordered pairs; this will take a very long time\n";
    }

    const std::vector<OrbitTriple> table = v_table(r, opt.threads);
    const Word n_words = Word(1) << r.dim();

    if (opt.json_out) {
        json rows = json::array();
        std::uint64_t sum = 0;
        for (Word x = 0; x < n_words; ++x) {
            const OrbitTriple& t = table[x];
            sum += t.total();
            rows.push_back(json{{"x", BitVec(x, r.dim()).to_string()},
                                {"v1", t.v1},
                                {"v2", t.v2},
                                {"v3", t.v3},
                                {"v", t.total()},
                                {"parity", t.total() & 1},
                                {"is_square", r.is_square(H2Class(BitVec(x, r.dim())))}});
        }
        out << json{{"schema", "vtable/1"}, {"dim", r.dim()}, {"rows", rows}, {"total", sum}}
                   .dump()
            << "\n";
        return kExitOk;
    }

    out << std::left << std::setw(std::max(r.dim(), 1) + 2) << "x"
        << std::right << std::setw(8) << "v1" << std::setw(8) << "v2" << std::setw(4) << "v3"
        << std::setw(10) << "v" << std::setw(8) << "parity" << std::setw(8) << "square"
        << "\n";
    std::uint64_t sum = 0;
    for (Word x = 0; x < n_words; ++x) {
        const OrbitTriple& t = table[x];
        sum += t.total();
        out << std::left << std::setw(std::max(r.dim(), 1) + 2)
            << BitVec(x, r.dim()).to_string() << std::right << std::setw(8) << t.v1
            << std::setw(8) << t.v2 << std::setw(4) << t.v3 << std::setw(10) << t.total()
            << std::setw(8) << (t.total() & 1) << std::setw(8)
            << (r.is_square(H2Class(BitVec(x, r.dim()))) ? "yes" : "no") << "\n";
    }
    out << "total " << sum << " (of " << total_count(r.dim()) << " Klein-4 classes)\n";
    return kExitOk;
}

int cmd_casson(const Options& opt, std::ostream& out, std::ostream& err) {
    const ParsedRing parsed = load_spec(opt.spec_path, opt, err);
    const CupRing& r = parsed.ring;
    const CassonReport rep = casson_report(r, class_arg(r, opt));

    if (opt.json_out) {
        out << json{{"schema", "casson/1"},
                    {"x", rep.x.to_string()},
                    {"b", rep.b},
                    {"k", rep.k},
                    {"v", rep.v},
                    {"divisibility_exponent", rep.divisibility_exponent},
                    {"parity", rep.parity},
                    {"applicability", to_string(rep.applicability)},
                    {"statement", rep.statement}}
                   .dump()
            << "\n";
        return kExitOk;
    }
    out << "x = " << rep.x.to_string() << "  (not a cup-square; admissible in the generalized "
        << "sense)\n";
    out << "b1(2) = " << rep.b << ", k(Y) = " << rep.k << ", v_Y(x) = " << rep.v << "\n";
    out << "applicability: " << to_string(rep.applicability) << "\n";
    out << rep.statement << "\n";
    return kExitOk;
}

// Display order of a triple: the zero of a degenerate triple {x, x, 0} goes
// last; generic triples print ascending with the sum last.
std::array<BitVec, 3> display_triple(const KleinTriple& t) {
    if (t.a.is_zero() && !t.b.is_zero()) return {t.b, t.third(), t.a};
    return {t.a, t.b, t.third()};
}

int cmd_ftable(const Options& opt, std::ostream& out, std::ostream& err) {
    const ParsedRing parsed = load_spec(opt.spec_path, opt, err);
    if (!parsed.cover)
        throw SpecError("ftable needs a spec of type \"branched_cover\", got \"" + parsed.type +
                        "\"");
    const BranchedCover& cover = *parsed.cover;
    if (cover.ring.dim() > 12 && !opt.override_cap)
        throw SpecError("a " + std::to_string(cover.components()) +
                        "-component cover has " + std::to_string(total_count(cover.ring.dim())) +
                        " rows; pass --override-cap to print them anyway");
    const auto rows = f_table(cover);

    if (opt.json_out) {
        json jrows = json::array();
        for (const auto& [t, subset] : rows) {
            const auto d = display_triple(t);
            jrows.push_back(
                json{{"triple", {class_name(d[0]), class_name(d[1]), class_name(d[2])}},
                     {"subset", subset.components()},
                     {"x", w2_of(cover.ring, t.a, t.b).to_string()}});
        }
        out << json{{"schema", "ftable/1"},
                    {"components", cover.components()},
                    {"relation", "a1+...+a" + std::to_string(cover.components()) + " = 0"},
                    {"rows", jrows}}
                   .dump()
            << "\n";
        return kExitOk;
    }
    for (const auto& [t, subset] : rows) {
        const auto d = display_triple(t);
        out << "f{" << class_name(d[0]) << ", " << class_name(d[1]) << ", " << class_name(d[2])
            << "} = " << subset.to_string() << "\n";
    }
    return kExitOk;
}

int cmd_verify(const Options& opt, std::ostream& out, std::ostream& err) {
    VerifyResult result;
    if (opt.family) {
        result = verify_family(opt.seed, opt.count, 10, nullptr);
    } else if (!opt.spec_path.empty()) {
        const ParsedRing parsed = load_spec(opt.spec_path, opt, err);
        if (parsed.ring.dim() > oracle::kOracleMaxDim)
            err << "note: dim above " << oracle::kOracleMaxDim
                << ", oracle cross-check skipped\n";
        else if (parsed.ring.dim() > 10)
            err << "note: brute-force cross-check at dim " << parsed.ring.dim()
                << " can take tens of seconds\n";
        result = verify_ring(parsed.ring);
    } else {
        throw SpecError("verify needs a spec file or --family");
    }

    if (!result.ok()) {
        out << "verify: FAIL  check=" << result.failure->check << "\n";
        out << result.failure->reproducer.dump() << "\n";
        return kExitVerifyFailed;
    }
    out << "verify: PASS  (rings=" << result.rings_checked
        << ", sum-law pairs=" << result.sum_pairs_checked << ")\n";
    return kExitOk;
}

int cmd_total(const Options& opt, std::ostream& out, std::ostream&) {
    out << total_count(opt.total_b) << "\n";
    return kExitOk;
}

int cmd_iso(const Options& opt, std::ostream& out, std::ostream& err) {
    const ParsedRing a = load_spec(opt.spec_path, opt, err);
    const ParsedRing b = load_spec(opt.spec_path2, opt, err);
    if (a.ring.dim() != b.ring.dim())
        throw SpecError("rings have different dimensions (" + std::to_string(a.ring.dim()) +
                        " vs " + std::to_string(b.ring.dim()) + ")");
    if (a.ring.dim() > 4)
        throw SpecError("isomorphism testing is exhaustive over GL(n,2); dim > 4 not supported");
    const bool iso = brute_isomorphic(a.ring, b.ring);
    if (opt.json_out)
        out << json{{"schema", "iso/1"}, {"isomorphic", iso}}.dump() << "\n";
    else
        out << "isomorphic: " << (iso ? "yes" : "no") << "\n";
    return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    Options opt;
    int rc = kExitOk;

    CLI::App app{"Klein-four connection counts and Casson-invariant parity constraints\n"
                 "from the mod-2 cohomology ring of a closed oriented 3-manifold"};
    app.require_subcommand(1);

    auto add_spec_flags = [&](CLI::App* cmd, bool with_json = true) {
        if (with_json) cmd->add_flag("--json", opt.json_out, "emit JSON");
        cmd->add_flag("--no-strict", opt.no_strict,
                      "accept tensors violating u(i,i,j)=u(j,j,i) with a warning");
    };

    CLI::App* info = app.add_subcommand("info", "ring summary: dim, k, squares, class counts");
    info->add_option("spec", opt.spec_path, "ring spec JSON file (- for stdin)")->required();
    add_spec_flags(info);

    CLI::App* vtable = app.add_subcommand("vtable", "stabilizer-refined count table over all x");
    vtable->add_option("spec", opt.spec_path, "ring spec JSON file (- for stdin)")->required();
    add_spec_flags(vtable);
    vtable->add_flag("--override-cap", opt.override_cap,
                     "allow dim up to 24 (warning: 4^dim scan)");
    vtable->add_option("--threads", opt.threads,
                       "scan workers (default: single below dim 12, all cores above)");

    CLI::App* casson = app.add_subcommand("casson", "divisibility/parity constraint report");
    casson->add_option("spec", opt.spec_path, "ring spec JSON file (- for stdin)")->required();
    add_spec_flags(casson);
    casson->add_option("--x", opt.x_bits, "class as dual bit-string (char p = value on a_{p+1})");
    casson->add_option("--x-square-of", opt.x_square_of,
                       "use the cup-square of this degree-1 class as x");

    CLI::App* ftable = app.add_subcommand("ftable",
                                          "w2 Poincare duals of all Klein-four classes "
                                          "of a branched double cover");
    ftable->add_option("spec", opt.spec_path, "branched_cover spec JSON file")->required();
    add_spec_flags(ftable);
    ftable->add_flag("--override-cap", opt.override_cap, "print tables beyond dim 12");

    CLI::App* verify = app.add_subcommand("verify", "run the invariant and oracle suite");
    verify->add_option("spec", opt.spec_path, "ring spec JSON file to verify");
    verify->add_flag("--family", opt.family, "verify a generated family instead of one spec");
    verify->add_option("--seed", opt.seed, "family generation seed (default 1)");
    verify->add_option("--count", opt.count, "number of family rings (default 100)");
    add_spec_flags(verify, false);

    CLI::App* total = app.add_subcommand("total", "number of Klein-four classes in dimension b");
    total->add_option("b", opt.total_b, "dimension")->required()->check(CLI::Range(0, kMaxDim));

    CLI::App* iso = app.add_subcommand("iso", "exhaustive ring isomorphism test (dim <= 4)");
    iso->add_option("spec1", opt.spec_path, "first ring spec")->required();
    iso->add_option("spec2", opt.spec_path2, "second ring spec")->required();
    add_spec_flags(iso);

    info->callback([&] { rc = cmd_info(opt, out, err); });
    vtable->callback([&] { rc = cmd_vtable(opt, out, err); });
    casson->callback([&] { rc = cmd_casson(opt, out, err); });
    ftable->callback([&] { rc = cmd_ftable(opt, out, err); });
    verify->callback([&] { rc = cmd_verify(opt, out, err); });
    total->callback([&] { rc = cmd_total(opt, out, err); });
    iso->callback([&] { rc = cmd_iso(opt, out, err); });

    // CLI11 wants argv-style input.
    std::vector<const char*> argv = {"klein4"};
    for (const std::string& a : args) argv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
        app.exit(e, out, err);
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return kExitInputError;
    } catch (const SpecError& e) {
        err << "error: " << e.what() << "\n";
        return kExitInputError;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return kExitInputError;
    } catch (const nlohmann::json::exception& e) {
        err << "error: invalid JSON: " << e.what() << "\n";
        return kExitInputError;
    } catch (const std::logic_error& e) {
        err << "internal check failed: " << e.what() << "\n";
        return kExitVerifyFailed;
    }
    return rc;
}

int run(int argc, const char* const* argv) {
    std::vector<std::string> args;
    for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
    return run(args, std::cout, std::cerr);
}

}  // namespace k4::cli
