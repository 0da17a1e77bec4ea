#include "seqmat/cli.hpp"

#include <fstream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "seqmat/norms.hpp"
#include "seqmat/recurrence.hpp"
#include "seqmat/structmat.hpp"
#include "seqmat/theorems.hpp"
#include "seqmat/verify.hpp"

namespace seqmat::cli {

namespace {

struct SpecFlags {
    std::string family = "trib";
    std::optional<long> a, b, c;
    std::optional<long> p, q, r0;
};

void add_spec_flags(CLI::App* cmd, SpecFlags& f, bool with_family = true) {
    if (with_family)
        cmd->add_option("--family", f.family, "sequence family")
            ->check(CLI::IsMember({"trib", "pp", "general"}));
    cmd->add_option("--a", f.a, "seed Q(0)");
    cmd->add_option("--b", f.b, "seed Q(1)");
    cmd->add_option("--c", f.c, "seed Q(2)");
    cmd->add_option("--p", f.p, "coefficient p (general family)");
    cmd->add_option("--q", f.q, "coefficient q (general family)");
    cmd->add_option("--r0", f.r0, "coefficient r (general family)");
}

RecurrenceSpec make_spec(const SpecFlags& f) {
    if (f.family == "trib") {
        long a = f.a.value_or(0), b = f.b.value_or(1), c = f.c.value_or(1);
        if (a == 0 && b == 1 && c == 1) return RecurrenceSpec::tribonacci();
        return RecurrenceSpec::generalized_tribonacci(a, b, c);
    }
    if (f.family == "pp")
        return RecurrenceSpec::pell_padovan(f.a.value_or(1), f.b.value_or(1), f.c.value_or(1));
    if (!f.p || !f.q || !f.r0)
        throw Error(Errc::Precondition, "general family needs --p, --q and --r0");
    return RecurrenceSpec::general(*f.p, *f.q, *f.r0, f.a.value_or(0), f.b.value_or(1),
                                   f.c.value_or(1));
}

Variant parse_variant(const std::string& s) {
    return s == "as-printed" ? Variant::AsPrinted : Variant::Corrected;
}

void write_output(const std::string& text, const std::string& out_path, std::ostream& out) {
    if (out_path.empty()) {
        out << text;
        if (!text.empty() && text.back() != '\n') out << '\n';
        return;
    }
    std::ofstream file(out_path, std::ios::binary);
    if (!file) throw Error(Errc::Precondition, "cannot open output path " + out_path);
    file << text;
}

std::string approx(double v) {
    std::ostringstream os;
    os.precision(12);
    os << "≈" << v;
    return os.str();
}

std::vector<Rat> slice_terms(const SequenceWindow& w, long from, long to) {
    std::vector<Rat> out;
    for (long k = from; k <= to; ++k) out.emplace_back(w.at(k));
    return out;
}

StructuredMatrix build_matrix(const RecurrenceSpec& spec, const std::string& kind, long n,
                              const Rat& scalar_r) {
    if (kind == "r-circulant" || kind == "circulant" || kind == "left-circulant") {
        SequenceWindow w = window(spec, 0, n - 1 < 2 ? 2 : n - 1);
        std::vector<Rat> row = slice_terms(w, 0, n - 1);
        if (kind == "r-circulant") return r_circulant(row, scalar_r);
        if (kind == "circulant") return circulant(row);
        return left_circulant(row);
    }
    if (kind == "semi-circulant") {
        SequenceWindow w = window(spec, 1, n);
        return semi_circulant(slice_terms(w, 1, n), 1, n);
    }
    if (kind == "hankel") {
        SequenceWindow w = window(spec, 1, 2 * n - 1);
        return hankel(slice_terms(w, 1, 2 * n - 1), 1, n);
    }
    // toeplitz needs U(-(n-1) .. n-1)
    SequenceWindow w = window(spec, -(n - 1) < 0 ? -(n - 1) : 0, n - 1 < 2 ? 2 : n - 1);
    return toeplitz(slice_terms(w, -(n - 1), n - 1), -(n - 1), n);
}

std::string matrix_to_table(const StructuredMatrix& m) {
    std::string out;
    for (long i = 0; i < m.order(); ++i) {
        for (long j = 0; j < m.order(); ++j) {
            if (j) out += ' ';
            out += rat_to_string(m(i, j));
        }
        out += '\n';
    }
    return out;
}

std::string matrix_to_csv(const StructuredMatrix& m) {
    std::string out;
    for (long i = 0; i < m.order(); ++i) {
        for (long j = 0; j < m.order(); ++j) {
            if (j) out += ',';
            out += rat_to_string(m(i, j));
        }
        out += '\n';
    }
    return out;
}

Family family_of_anchor(const std::string& s) {
    if (s.rfind("PP_", 0) == 0) return Family::GeneralizedPellPadovan;
    if (s.rfind("TRIB_", 0) == 0) return Family::GeneralizedTribonacci;
    return Family::GeneralThirdOrder;
}

RecurrenceSpec spec_for_anchor(const std::string& anchor, const SpecFlags& flags) {
    SpecFlags f = flags;
    switch (family_of_anchor(anchor)) {
        case Family::GeneralizedPellPadovan: f.family = "pp"; break;
        case Family::GeneralThirdOrder: f.family = "general"; break;
        default: f.family = "trib"; break;
    }
    return make_spec(f);
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact toolkit for structured-matrix norms of third-order recurrences"};
    app.require_subcommand(1);
    app.fallthrough();

    std::string format = "table";
    std::string out_path;
    app.add_option("--format", format, "output format")
        ->check(CLI::IsMember({"json", "csv", "table"}));
    app.add_option("--out", out_path, "write output to this path instead of stdout");

    // seq
    auto* seq_cmd = app.add_subcommand("seq", "print a window of sequence terms");
    SpecFlags seq_flags;
    long seq_lo = 0, seq_hi = 10;
    add_spec_flags(seq_cmd, seq_flags);
    seq_cmd->add_option("--lo", seq_lo, "first index");
    seq_cmd->add_option("--hi", seq_hi, "last index");

    // matrix
    auto* mat_cmd = app.add_subcommand("matrix", "construct a structured matrix");
    SpecFlags mat_flags;
    std::string mat_kind = "circulant";
    long mat_n = 4;
    std::string mat_r = "1";
    add_spec_flags(mat_cmd, mat_flags);
    mat_cmd->add_option("--kind", mat_kind, "matrix construction")
        ->check(CLI::IsMember(
            {"circulant", "r-circulant", "left-circulant", "semi-circulant", "hankel", "toeplitz"}));
    mat_cmd->add_option("--n", mat_n, "matrix order");
    mat_cmd->add_option("--r", mat_r, "scalar r for r-circulant (rational, e.g. -1/2)");

    // norm
    auto* norm_cmd = app.add_subcommand("norm", "norm summary of a constructed matrix");
    SpecFlags norm_flags;
    std::string norm_kind = "circulant";
    long norm_n = 4;
    std::string norm_r = "1";
    add_spec_flags(norm_cmd, norm_flags);
    norm_cmd->add_option("--kind", norm_kind, "matrix construction")
        ->check(CLI::IsMember(
            {"circulant", "r-circulant", "left-circulant", "semi-circulant", "hankel", "toeplitz"}));
    norm_cmd->add_option("--n", norm_n, "matrix order");
    norm_cmd->add_option("--r", norm_r, "scalar r for r-circulant");

    // identity
    auto* id_cmd = app.add_subcommand("identity", "evaluate one identity against its oracle");
    SpecFlags id_flags;
    std::string id_name;
    long id_n = 1;
    std::string id_variant = "corrected";
    add_spec_flags(id_cmd, id_flags, /*with_family=*/false);
    id_cmd->add_option("--id", id_name, "identity id, e.g. PP_SUM")->required();
    id_cmd->add_option("--n", id_n, "upper summation index");
    id_cmd->add_option("--variant", id_variant, "formula variant")
        ->check(CLI::IsMember({"as-printed", "corrected"}));

    // bounds
    auto* bd_cmd = app.add_subcommand("bounds", "evaluate one norm theorem");
    SpecFlags bd_flags;
    std::string bd_theorem;
    long bd_n = 2;
    std::string bd_r = "1";
    std::string bd_variant = "corrected";
    add_spec_flags(bd_cmd, bd_flags, /*with_family=*/false);
    bd_cmd->add_option("--theorem", bd_theorem, "theorem id, e.g. TRIB_HANKEL_SPEC")->required();
    bd_cmd->add_option("--n", bd_n, "matrix order");
    bd_cmd->add_option("--r", bd_r, "scalar r for the r-circulant theorems");
    bd_cmd->add_option("--variant", bd_variant, "formula variant")
        ->check(CLI::IsMember({"as-printed", "corrected"}));

    // verify
    auto* ver_cmd = app.add_subcommand("verify", "run the full grids and emit the errata ledger");
    std::string ver_preset = "default";
    std::string ver_golden = "data/golden_ledger.json";
    bool ver_serial = false;
    ver_cmd->add_option("--grid-preset", ver_preset, "grid preset")
        ->check(CLI::IsMember({"default", "smoke"}));
    ver_cmd->add_option("--golden", ver_golden, "committed golden ledger to compare against");
    ver_cmd->add_flag("--serial", ver_serial, "disable the parallel grid runner");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << '\n';
        return 1;
    }

    try {
        if (seq_cmd->parsed()) {
            RecurrenceSpec spec = make_spec(seq_flags);
            SequenceWindow w = window(spec, seq_lo, seq_hi);
            std::string text;
            if (format == "json") {
                nlohmann::ordered_json j;
                j["family"] = std::string(family_name(spec.family));
                j["p"] = spec.p.get_str();
                j["q"] = spec.q.get_str();
                j["r"] = spec.r.get_str();
                j["a"] = spec.a.get_str();
                j["b"] = spec.b.get_str();
                j["c"] = spec.c.get_str();
                j["lo"] = w.lo;
                nlohmann::ordered_json terms = nlohmann::ordered_json::array();
                for (const Int& t : w.terms) terms.push_back(t.get_str());
                j["terms"] = std::move(terms);
                text = j.dump();
            } else if (format == "csv") {
                text = "n,term\n";
                for (long n = w.lo; n <= w.hi(); ++n)
                    text += std::to_string(n) + "," + w.at(n).get_str() + "\n";
            } else {
                for (long n = w.lo; n <= w.hi(); ++n) {
                    if (n > w.lo) text += ' ';
                    text += w.at(n).get_str();
                }
            }
            write_output(text, out_path, out);
            return 0;
        }

        if (mat_cmd->parsed()) {
            StructuredMatrix m =
                build_matrix(make_spec(mat_flags), mat_kind, mat_n, rat_from_string(mat_r));
            std::string text = format == "json"  ? matrix_to_json(m)
                               : format == "csv" ? matrix_to_csv(m)
                                                 : matrix_to_table(m);
            write_output(text, out_path, out);
            return 0;
        }

        if (norm_cmd->parsed()) {
            StructuredMatrix m =
                build_matrix(make_spec(norm_flags), norm_kind, norm_n, rat_from_string(norm_r));
            NormSummary s = norm_summary(m);
            std::string text;
            if (format == "json") {
                text = norm_summary_to_json(s);
            } else if (format == "csv") {
                text =
                    "frobenius_sq,frobenius,spectral_estimate,spectral_lower_witness,max_abs,"
                    "op_one,op_inf,r1,c1\n";
                std::ostringstream os;
                os.precision(17);
                os << rat_to_string(s.frobenius_sq) << ',' << s.frobenius << ','
                   << s.spectral_estimate << ',' << s.spectral_lower_witness << ','
                   << rat_to_string(s.max_abs) << ',' << rat_to_string(s.op_one) << ','
                   << rat_to_string(s.op_inf) << ',' << s.r1 << ',' << s.c1 << '\n';
                text += os.str();
            } else {
                text += "frobenius_sq " + rat_to_string(s.frobenius_sq) + "\n";
                text += "frobenius " + approx(s.frobenius) + "\n";
                text += "spectral " + approx(s.spectral_estimate) + "\n";
                text += "spectral_lower_witness " + approx(s.spectral_lower_witness) + "\n";
                text += "max_abs " + rat_to_string(s.max_abs) + "\n";
                text += "op_one " + rat_to_string(s.op_one) + "\n";
                text += "op_inf " + rat_to_string(s.op_inf) + "\n";
                text += "r1 " + approx(s.r1) + "\n";
                text += "c1 " + approx(s.c1) + "\n";
            }
            write_output(text, out_path, out);
            return 0;
        }

        if (id_cmd->parsed()) {
            IdentityId id = identity_id_from_string(id_name);
            RecurrenceSpec spec = spec_for_anchor(id_name, id_flags);
            Variant v = parse_variant(id_variant);
            Rat closed;
            switch (id) {
                case IdentityId::GenSum: closed = sum_general(spec, id_n); break;
                case IdentityId::TribSumClosed:
                case IdentityId::PpSum: closed = closed_sum(spec, id_n, v).value; break;
                case IdentityId::TribSquareSum:
                case IdentityId::PpSquareSum: closed = square_sum(spec, id_n, v).value; break;
                case IdentityId::TribLag2Product:
                    closed = lag2_product_sum(spec, id_n, v).value;
                    break;
                case IdentityId::TribAdjProduct:
                    closed = adjacent_product_sum(spec, id_n, v).value;
                    break;
                case IdentityId::TribDoubleSum:
                case IdentityId::PpDoubleSum:
                    closed = prefix_square_double_sum(spec, id_n, v).value;
                    break;
            }
            Rat oracle = oracle_identity(id, spec, id_n);
            bool match = closed == oracle;
            std::string text;
            if (format == "json") {
                nlohmann::ordered_json j;
                j["id"] = id_name;
                j["variant"] = std::string(variant_name(v));
                j["family"] = std::string(family_name(spec.family));
                j["a"] = spec.a.get_str();
                j["b"] = spec.b.get_str();
                j["c"] = spec.c.get_str();
                j["n"] = id_n;
                j["closed"] = rat_to_string(closed);
                j["oracle"] = rat_to_string(oracle);
                j["verdict"] = match ? "Match" : "Mismatch";
                text = j.dump();
            } else if (format == "csv") {
                text = "id,variant,n,closed,oracle,verdict\n" + id_name + "," +
                       std::string(variant_name(v)) + "," + std::to_string(id_n) + "," +
                       rat_to_string(closed) + "," + rat_to_string(oracle) + "," +
                       (match ? "Match" : "Mismatch") + "\n";
            } else {
                text = "closed " + rat_to_string(closed) + "\noracle " + rat_to_string(oracle) +
                       "\nverdict " + (match ? "Match" : "Mismatch") + "\n";
            }
            write_output(text, out_path, out);
            return 0;
        }

        if (bd_cmd->parsed()) {
            TheoremId id = theorem_id_from_string(bd_theorem);
            RecurrenceSpec spec = spec_for_anchor(bd_theorem, bd_flags);
            Variant v = parse_variant(bd_variant);
            Rat scalar_r = rat_from_string(bd_r);
            BoundCheck bc;
            switch (id) {
                case TheoremId::TribRcircBounds:
                case TheoremId::PpRcircBounds: bc = rcirc_bounds(spec, bd_n, scalar_r); break;
                case TheoremId::TribCirc:
                case TheoremId::PpCirc: bc = circulant_report(spec, bd_n); break;
                case TheoremId::TribSemicirc:
                case TheoremId::PpSemicirc: bc = semicirculant_frobenius(spec, bd_n, v); break;
                case TheoremId::TribHankelFrob:
                case TheoremId::PpHankelFrob: bc = hankel_frobenius(spec, bd_n, v); break;
                case TheoremId::TribHankelSpec:
                case TheoremId::PpHankelSpec: bc = hankel_spectral_bounds(spec, bd_n, v); break;
                case TheoremId::TribHankelOneInf:
                case TheoremId::PpHankelOneInf: bc = hankel_one_inf(spec, bd_n); break;
            }
            std::string text;
            if (format == "json") {
                text = bound_check_to_json(bc);
            } else if (format == "csv") {
                nlohmann::json j = nlohmann::json::parse(bound_check_to_json(bc));
                std::string header, row;
                for (auto it = j.begin(); it != j.end(); ++it) {
                    if (!header.empty()) {
                        header += ',';
                        row += ',';
                    }
                    header += it.key();
                    row += it.value().is_string() ? it.value().get<std::string>()
                                                  : it.value().dump();
                }
                text = header + "\n" + row + "\n";
            } else {
                text += "theorem " + std::string(theorem_id_string(bc.theorem_id)) + "\n";
                if (bc.variant)
                    text += "variant " + std::string(variant_name(*bc.variant)) + "\n";
                if (bc.lower) text += "lower " + approx(*bc.lower) + "\n";
                if (bc.upper) text += "upper " + approx(*bc.upper) + "\n";
                if (bc.closed_form) text += "closed_form " + rat_to_string(*bc.closed_form) + "\n";
                if (bc.observed_exact)
                    text += "observed_exact " + rat_to_string(*bc.observed_exact) + "\n";
                if (bc.observed) text += "observed " + approx(*bc.observed) + "\n";
                if (bc.bracket_lower) text += "bracket_lower " + approx(*bc.bracket_lower) + "\n";
                if (bc.bracket_upper) text += "bracket_upper " + approx(*bc.bracket_upper) + "\n";
                if (bc.bracket_verdict)
                    text += "bracket_verdict " + std::string(verdict_string(*bc.bracket_verdict)) +
                            "\n";
                text += "verdict " + std::string(verdict_string(bc.verdict)) + "\n";
            }
            write_output(text, out_path, out);
            return 0;
        }

        if (ver_cmd->parsed()) {
            ExecMode mode = ver_serial ? ExecMode::Serial : ExecMode::Parallel;
            IdentityGridConfig icfg = ver_preset == "smoke" ? IdentityGridConfig::preset_smoke()
                                                            : IdentityGridConfig::preset_default();
            BoundGridConfig bcfg = ver_preset == "smoke" ? BoundGridConfig::preset_smoke()
                                                         : BoundGridConfig::preset_default();
            auto identity_records = run_identity_grid(icfg, mode);
            auto bound_records = run_bound_grid(bcfg, mode);
            ErrataLedger ledger = emit_ledger(identity_records, bound_records);
            std::string json_text = ledger_to_json(ledger);

            std::string text = format == "json"  ? json_text
                               : format == "csv" ? [&] {
                                     std::string csv = "anchor,status,counterexample,corrected_ref\n";
                                     for (const LedgerEntry& e : ledger.entries) {
                                         csv += e.anchor + "," +
                                                std::string(ledger_status_string(e.status)) + ",";
                                         if (e.counterexample)
                                             csv += "\"" + e.counterexample->closed + " vs " +
                                                    e.counterexample->oracle + "\"";
                                         csv += "," + e.corrected_ref + "\n";
                                     }
                                     return csv;
                                 }()
                                                 : ledger_to_markdown(ledger);
            write_output(text, out_path, out);

            if (ver_preset == "default") {
                std::ifstream golden(ver_golden, std::ios::binary);
                if (!golden) {
                    err << "note: golden ledger not found at " << ver_golden
                        << "; skipping comparison\n";
                    return 0;
                }
                std::stringstream buf;
                buf << golden.rdbuf();
                if (buf.str() != json_text) {
                    err << "verify: ledger differs from committed golden ledger at " << ver_golden
                        << '\n';
                    return 2;
                }
            }
            return 0;
        }
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    }
    return 1;
}

}  // namespace seqmat::cli
