#include "seqmat/verify.hpp"

#include <algorithm>
#include <array>
#include <cstdio>
#include <map>

#include "json.hpp"

namespace seqmat {

namespace {

std::string fmt_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

std::string variant_suffix(Variant v, bool repaired_label) {
    if (v == Variant::AsPrinted) return "/as-printed";
    return repaired_label ? "/repaired" : "/corrected";
}

RecurrenceSpec family_spec(Family fam, long a, long b, long c) {
    return fam == Family::GeneralizedPellPadovan
               ? RecurrenceSpec::pell_padovan(a, b, c)
               : RecurrenceSpec::generalized_tribonacci(a, b, c);
}

// ---------------------------------------------------------------- oracles

struct PrefixSums {
    // index k holds the sum over 1..k; index 0 is the empty sum
    std::vector<Rat> sum, square, lag2, adj, dbl;
};

PrefixSums build_prefix(const SequenceWindow& w, long n_max, bool sums_only = false) {
    PrefixSums p;
    auto take = [&](std::vector<Rat>& v) { v.assign(static_cast<size_t>(n_max) + 1, Rat(0)); };
    take(p.sum);
    take(p.square);
    take(p.lag2);
    take(p.adj);
    take(p.dbl);
    for (long k = 1; k <= n_max; ++k) {
        size_t i = static_cast<size_t>(k);
        p.sum[i] = p.sum[i - 1] + rat(w.at(k));
        if (sums_only) continue;
        p.square[i] = p.square[i - 1] + rat(Int(w.at(k) * w.at(k)));
        p.lag2[i] = p.lag2[i - 1] + rat(Int(w.at(k) * w.at(k - 2)));
        p.adj[i] = p.adj[i - 1] + rat(Int(w.at(k) * w.at(k + 1)));
        p.dbl[i] = p.dbl[i - 1] + p.square[i];
    }
    return p;
}

}  // namespace

Rat oracle_identity(IdentityId id, const RecurrenceSpec& spec, long n) {
    if (n < 0) throw Error(Errc::Precondition, "oracle needs n >= 0");
    auto sum_over = [&](long lo_idx, auto&& term_fn) {
        Rat acc(0);
        for (long k = 1; k <= n; ++k) acc += term_fn(k);
        (void)lo_idx;
        return acc;
    };
    switch (id) {
        case IdentityId::GenSum: {
            SequenceWindow w = window(spec, 0, std::max(n, 1L));
            return sum_over(0, [&](long k) { return rat(w.at(k)); });
        }
        case IdentityId::TribSumClosed:
        case IdentityId::PpSum: {
            SequenceWindow w = window(spec, 0, std::max(n, 1L));
            return sum_over(0, [&](long k) { return rat(w.at(k)); });
        }
        case IdentityId::TribSquareSum:
        case IdentityId::PpSquareSum: {
            SequenceWindow w = window(spec, 0, std::max(n, 1L));
            return sum_over(0, [&](long k) { return rat(Int(w.at(k) * w.at(k))); });
        }
        case IdentityId::TribLag2Product: {
            SequenceWindow w = window(spec, -1, std::max(n, 1L));
            return sum_over(-1, [&](long k) { return rat(Int(w.at(k) * w.at(k - 2))); });
        }
        case IdentityId::TribAdjProduct: {
            SequenceWindow w = window(spec, 0, n + 1);
            return sum_over(0, [&](long k) { return rat(Int(w.at(k) * w.at(k + 1))); });
        }
        case IdentityId::TribDoubleSum:
        case IdentityId::PpDoubleSum: {
            SequenceWindow w = window(spec, 0, std::max(n, 1L));
            Rat acc(0);
            for (long m = 1; m <= n; ++m)
                for (long k = 1; k <= m; ++k) acc += rat(Int(w.at(k) * w.at(k)));
            return acc;
        }
    }
    throw Error(Errc::Precondition, "unreachable identity id");
}

// ------------------------------------------------------------ identity grid

IdentityGridConfig IdentityGridConfig::preset_default() {
    IdentityGridConfig cfg;
    // 20 general specs with p+q+r != 1 and r != 0, covering negative
    // coefficients, negative denominators and zero seeds.
    const long raw[20][6] = {
        {1, 1, 1, 0, 1, 1},  {2, 1, 1, 1, 1, 1},   {1, 1, 2, 0, 1, 1},  {0, 1, 1, 1, 1, 1},
        {1, 0, 1, 1, 2, 3},  {2, 2, 1, 0, 0, 1},   {1, 2, 1, 2, 0, 1},  {3, 1, 1, 1, 0, 0},
        {2, 1, -1, 1, 1, 1}, {-1, 1, 2, 1, 2, 3},  {2, -1, 1, 0, 1, 2}, {1, -2, 3, 1, 1, 0},
        {0, 0, 2, 1, 2, 3},  {-2, 1, -1, 2, 1, 1}, {1, 3, 2, 0, 2, 1},  {2, 0, 3, 3, 2, 1},
        {-1, -1, 1, 1, 0, 1}, {4, 1, 1, 0, 0, 0},  {1, 1, 3, 2, 2, 2},  {0, 2, 2, 1, 3, 0},
    };
    for (const auto& t : raw)
        cfg.general_sample.push_back(
            RecurrenceSpec::general(t[0], t[1], t[2], t[3], t[4], t[5]));
    return cfg;
}

IdentityGridConfig IdentityGridConfig::preset_smoke() {
    IdentityGridConfig cfg = preset_default();
    cfg.seed_max = 1;
    cfg.n_max = 8;
    cfg.general_n_max = 8;
    cfg.general_sample.resize(5);
    return cfg;
}

namespace {

struct IdentitySlot {
    IdentityId id;
    std::optional<Variant> variant;  // nullopt -> single-form identity
    bool repaired_label = false;
};

const std::vector<IdentitySlot>& trib_slots() {
    static const std::vector<IdentitySlot> s = {
        {IdentityId::TribSumClosed, Variant::AsPrinted},
        {IdentityId::TribSumClosed, Variant::Corrected},
        {IdentityId::TribSquareSum, std::nullopt},
        {IdentityId::TribLag2Product, Variant::AsPrinted},
        {IdentityId::TribLag2Product, Variant::Corrected},
        {IdentityId::TribAdjProduct, Variant::AsPrinted},
        {IdentityId::TribAdjProduct, Variant::Corrected},
        {IdentityId::TribDoubleSum, Variant::AsPrinted},
        {IdentityId::TribDoubleSum, Variant::Corrected},
    };
    return s;
}

const std::vector<IdentitySlot>& pp_slots() {
    static const std::vector<IdentitySlot> s = {
        {IdentityId::PpSum, std::nullopt},
        {IdentityId::PpSquareSum, Variant::AsPrinted},
        {IdentityId::PpSquareSum, Variant::Corrected},
        {IdentityId::PpDoubleSum, Variant::AsPrinted},
        {IdentityId::PpDoubleSum, Variant::Corrected},
    };
    return s;
}

std::string identity_anchor(const IdentitySlot& slot) {
    std::string s{identity_id_string(slot.id)};
    if (slot.variant) s += variant_suffix(*slot.variant, slot.repaired_label);
    return s;
}

Rat evaluate_identity(const SequenceWindow& w, const IdentitySlot& slot, long n) {
    Variant v = slot.variant.value_or(Variant::Corrected);
    switch (slot.id) {
        case IdentityId::TribSumClosed:
        case IdentityId::PpSum: return closed_sum(w, n, v).value;
        case IdentityId::TribSquareSum:
        case IdentityId::PpSquareSum: return square_sum(w, n, v).value;
        case IdentityId::TribLag2Product: return lag2_product_sum(w, n, v).value;
        case IdentityId::TribAdjProduct: return adjacent_product_sum(w, n, v).value;
        case IdentityId::TribDoubleSum:
        case IdentityId::PpDoubleSum: return prefix_square_double_sum(w, n, v).value;
        case IdentityId::GenSum: return sum_general(w, n);
    }
    throw Error(Errc::Precondition, "unreachable identity slot");
}

const Rat& oracle_for(const PrefixSums& p, IdentityId id, long n) {
    size_t i = static_cast<size_t>(n);
    switch (id) {
        case IdentityId::GenSum:
        case IdentityId::TribSumClosed:
        case IdentityId::PpSum: return p.sum[i];
        case IdentityId::TribSquareSum:
        case IdentityId::PpSquareSum: return p.square[i];
        case IdentityId::TribLag2Product: return p.lag2[i];
        case IdentityId::TribAdjProduct: return p.adj[i];
        case IdentityId::TribDoubleSum:
        case IdentityId::PpDoubleSum: return p.dbl[i];
    }
    throw Error(Errc::Precondition, "unreachable oracle id");
}

struct FailPoint {
    long n, a, b, c;
    std::optional<std::array<long, 3>> pqr;
    std::string closed, oracle;

    bool before(const FailPoint& other) const {
        return std::tie(n, a, b, c) < std::tie(other.n, other.a, other.b, other.c);
    }
};

struct SlotAgg {
    long points = 0;
    long failures = 0;
    std::optional<FailPoint> best;
};

Counterexample to_counterexample(Family fam, const FailPoint& f) {
    Counterexample ce;
    ce.family = std::string(family_name(fam));
    ce.a = f.a;
    ce.b = f.b;
    ce.c = f.c;
    ce.pqr = f.pqr;
    ce.n = f.n;
    ce.closed = f.closed;
    ce.oracle = f.oracle;
    return ce;
}

}  // namespace

std::vector<VerificationRecord> run_identity_grid(const IdentityGridConfig& cfg, ExecMode mode) {
    struct Task {
        Family fam;
        long a, b, c;
    };
    std::vector<Task> tasks;
    for (Family fam : {Family::GeneralizedTribonacci, Family::GeneralizedPellPadovan})
        for (long a = cfg.seed_min; a <= cfg.seed_max; ++a)
            for (long b = cfg.seed_min; b <= cfg.seed_max; ++b)
                for (long c = cfg.seed_min; c <= cfg.seed_max; ++c)
                    tasks.push_back({fam, a, b, c});

    auto slots_of = [](Family fam) -> const std::vector<IdentitySlot>& {
        return fam == Family::GeneralizedPellPadovan ? pp_slots() : trib_slots();
    };

    // Per task, per slot: points, failures, first failing n (n is the outer
    // loop, so the first local failure is the n-minimal one).
    std::vector<std::vector<SlotAgg>> results(tasks.size());
    std::vector<std::string> errors(tasks.size());

    auto body = [&](size_t t) {
        try {
            const Task& task = tasks[t];
            RecurrenceSpec spec = family_spec(task.fam, task.a, task.b, task.c);
            SequenceWindow w = window(spec, -5, 2 * cfg.n_max + 8);
            PrefixSums prefix = build_prefix(w, cfg.n_max);
            const auto& slots = slots_of(task.fam);
            std::vector<SlotAgg> agg(slots.size());
            for (long n = cfg.n_min; n <= cfg.n_max; ++n) {
                for (size_t s = 0; s < slots.size(); ++s) {
                    Rat closed = evaluate_identity(w, slots[s], n);
                    const Rat& oracle = oracle_for(prefix, slots[s].id, n);
                    ++agg[s].points;
                    if (closed != oracle) {
                        ++agg[s].failures;
                        if (!agg[s].best)
                            agg[s].best = FailPoint{n, task.a, task.b, task.c, std::nullopt,
                                                    rat_to_string(closed), rat_to_string(oracle)};
                    }
                }
            }
            results[t] = std::move(agg);
        } catch (const std::exception& e) {
            errors[t] = e.what();
        }
    };

    if (mode == ExecMode::Parallel) {
#pragma omp parallel for schedule(dynamic)
        for (long t = 0; t < static_cast<long>(tasks.size()); ++t) body(static_cast<size_t>(t));
    } else {
        for (size_t t = 0; t < tasks.size(); ++t) body(t);
    }
    for (const std::string& e : errors)
        if (!e.empty()) throw Error(Errc::Precondition, "identity grid task failed: " + e);

    // Deterministic ordered merge: GEN_SUM first, then tribonacci slots,
    // then Pell-Padovan slots, as registered.
    std::vector<VerificationRecord> records;

    {
        VerificationRecord gen;
        gen.anchor = std::string(identity_id_string(IdentityId::GenSum));
        std::optional<std::pair<size_t, FailPoint>> best;
        for (size_t si = 0; si < cfg.general_sample.size(); ++si) {
            const RecurrenceSpec& spec = cfg.general_sample[si];
            SequenceWindow w = window(spec, 0, cfg.general_n_max + 3);
            PrefixSums prefix = build_prefix(w, cfg.general_n_max, /*sums_only=*/true);
            for (long n = cfg.n_min; n <= cfg.general_n_max; ++n) {
                Rat closed = sum_general(w, n);
                const Rat& oracle = prefix.sum[static_cast<size_t>(n)];
                ++gen.points;
                if (closed != oracle) {
                    ++gen.failures;
                    if (!best)
                        best = {si,
                                FailPoint{n, spec.a.get_si(), spec.b.get_si(), spec.c.get_si(),
                                          std::array<long, 3>{spec.p.get_si(), spec.q.get_si(),
                                                              spec.r.get_si()},
                                          rat_to_string(closed), rat_to_string(oracle)}};
                }
            }
        }
        if (best) gen.counterexample = to_counterexample(Family::GeneralThirdOrder, best->second);
        records.push_back(std::move(gen));
    }

    for (Family fam : {Family::GeneralizedTribonacci, Family::GeneralizedPellPadovan}) {
        const auto& slots = slots_of(fam);
        for (size_t s = 0; s < slots.size(); ++s) {
            VerificationRecord rec;
            rec.anchor = identity_anchor(slots[s]);
            std::optional<FailPoint> best;
            for (size_t t = 0; t < tasks.size(); ++t) {
                if (tasks[t].fam != fam) continue;
                const SlotAgg& agg = results[t][s];
                rec.points += agg.points;
                rec.failures += agg.failures;
                if (agg.best && (!best || agg.best->before(*best))) best = agg.best;
            }
            if (best) rec.counterexample = to_counterexample(fam, *best);
            records.push_back(std::move(rec));
        }
    }
    return records;
}

// --------------------------------------------------------------- bound grid

BoundGridConfig BoundGridConfig::preset_default() {
    BoundGridConfig cfg;
    cfg.seeds = {{0, 1, 1}, {1, 1, 1}, {1, 2, 3}, {2, 0, 1}};
    cfg.orders = {1, 2, 3, 4, 8, 16, 32, 64, 128};
    cfg.scalars = {rat(-2), rat(-1), rat(-1, 2), rat(1, 2), rat(1), rat(2), rat(3)};
    return cfg;
}

BoundGridConfig BoundGridConfig::preset_smoke() {
    BoundGridConfig cfg;
    cfg.seeds = {{0, 1, 1}, {1, 1, 1}};
    cfg.orders = {1, 2, 4, 8};
    cfg.scalars = {rat(-1), rat(1, 2), rat(2)};
    return cfg;
}

namespace {

enum class TheoremSlotKind { Rcirc, Circ, Semicirc, HankelFrob, HankelSpec, HankelOneInf };

struct TheoremSlot {
    TheoremSlotKind kind;
    std::optional<Variant> variant;
    bool repaired_label = false;
};

const std::vector<TheoremSlot>& theorem_slots() {
    static const std::vector<TheoremSlot> s = {
        {TheoremSlotKind::Rcirc, std::nullopt},
        {TheoremSlotKind::Circ, std::nullopt},
        {TheoremSlotKind::Semicirc, Variant::AsPrinted},
        {TheoremSlotKind::Semicirc, Variant::Corrected},
        {TheoremSlotKind::HankelFrob, Variant::AsPrinted},
        {TheoremSlotKind::HankelFrob, Variant::Corrected},
        {TheoremSlotKind::HankelSpec, Variant::AsPrinted, true},
        {TheoremSlotKind::HankelSpec, Variant::Corrected, true},
        {TheoremSlotKind::HankelOneInf, std::nullopt},
    };
    return s;
}

TheoremId slot_theorem_id(TheoremSlotKind kind, Family fam) {
    bool pp = fam == Family::GeneralizedPellPadovan;
    switch (kind) {
        case TheoremSlotKind::Rcirc:
            return pp ? TheoremId::PpRcircBounds : TheoremId::TribRcircBounds;
        case TheoremSlotKind::Circ: return pp ? TheoremId::PpCirc : TheoremId::TribCirc;
        case TheoremSlotKind::Semicirc:
            return pp ? TheoremId::PpSemicirc : TheoremId::TribSemicirc;
        case TheoremSlotKind::HankelFrob:
            return pp ? TheoremId::PpHankelFrob : TheoremId::TribHankelFrob;
        case TheoremSlotKind::HankelSpec:
            return pp ? TheoremId::PpHankelSpec : TheoremId::TribHankelSpec;
        case TheoremSlotKind::HankelOneInf:
            return pp ? TheoremId::PpHankelOneInf : TheoremId::TribHankelOneInf;
    }
    throw Error(Errc::Precondition, "unreachable theorem slot");
}

std::string theorem_anchor(const TheoremSlot& slot, Family fam) {
    std::string s{theorem_id_string(slot_theorem_id(slot.kind, fam))};
    if (slot.variant) s += variant_suffix(*slot.variant, slot.repaired_label);
    return s;
}

struct BoundPoint {
    size_t slot_idx;
    Family fam;
    size_t seed_idx;
    size_t n_idx;
    size_t r_idx;  // rcirc only; 0 otherwise
};

struct BoundOutcome {
    bool failed = false;
    bool out_of_hypothesis = false;
    bool nonconverged = false;
    bool lemma_divergence = false;  // corrected lemma route disagreed
    std::string closed, oracle;
    std::optional<Rat> scalar_r;
    long n = 0;
};

std::string bracket_text(const BoundCheck& bc) {
    if (bc.closed_form) return rat_to_string(*bc.closed_form);
    return "[" + fmt_double(bc.lower.value_or(0)) + ", " + fmt_double(bc.upper.value_or(0)) + "]";
}

std::string observed_text(const BoundCheck& bc) {
    if (bc.observed_exact) return rat_to_string(*bc.observed_exact);
    return fmt_double(bc.observed.value_or(0));
}

BoundOutcome summarize(const BoundCheck& bc) {
    BoundOutcome out;
    out.failed = bc.failed();
    out.out_of_hypothesis = bc.verdict == Verdict::OutOfHypothesis;
    out.nonconverged = !bc.spectral_converged;
    out.lemma_divergence = bc.lemma_agree_corrected && !*bc.lemma_agree_corrected;
    out.closed = bracket_text(bc);
    out.oracle = observed_text(bc);
    out.scalar_r = bc.scalar_r;
    out.n = bc.n;
    return out;
}

}  // namespace

std::vector<VerificationRecord> run_bound_grid(const BoundGridConfig& cfg, ExecMode mode) {
    const auto& slots = theorem_slots();
    long n_max = *std::max_element(cfg.orders.begin(), cfg.orders.end());

    // One window per (family, seed tuple), shared by all grid points.
    std::vector<SequenceWindow> windows;
    std::vector<BoundPoint> points;
    for (Family fam : {Family::GeneralizedTribonacci, Family::GeneralizedPellPadovan}) {
        for (size_t si = 0; si < cfg.seeds.size(); ++si) {
            const SeedTuple& seeds = cfg.seeds[si];
            windows.push_back(
                window(family_spec(fam, seeds.a, seeds.b, seeds.c), -5, 2 * n_max + 4));
            for (size_t slot = 0; slot < slots.size(); ++slot)
                for (size_t ni = 0; ni < cfg.orders.size(); ++ni) {
                    if (slots[slot].kind == TheoremSlotKind::Rcirc) {
                        for (size_t ri = 0; ri < cfg.scalars.size(); ++ri)
                            points.push_back({slot, fam, si, ni, ri});
                    } else {
                        points.push_back({slot, fam, si, ni, 0});
                    }
                }
        }
    }

    auto window_of = [&](Family fam, size_t seed_idx) -> const SequenceWindow& {
        size_t base = fam == Family::GeneralizedTribonacci ? 0 : cfg.seeds.size();
        return windows[base + seed_idx];
    };

    std::vector<BoundOutcome> outcomes(points.size());
    std::vector<std::string> errors(points.size());

    auto body = [&](size_t idx) {
        try {
            const BoundPoint& pt = points[idx];
            const SequenceWindow& w = window_of(pt.fam, pt.seed_idx);
            long n = cfg.orders[pt.n_idx];
            // Spectral work runs serial inside each point; the grid itself
            // carries the parallelism.
            SpectralOptions opt{cfg.tol, cfg.max_iters, ExecMode::Serial};
            const TheoremSlot& slot = slots[pt.slot_idx];
            BoundCheck bc;
            switch (slot.kind) {
                case TheoremSlotKind::Rcirc:
                    bc = rcirc_bounds(w, n, cfg.scalars[pt.r_idx], opt);
                    break;
                case TheoremSlotKind::Circ: bc = circulant_report(w, n, opt); break;
                case TheoremSlotKind::Semicirc:
                    bc = semicirculant_frobenius(w, n, *slot.variant);
                    break;
                case TheoremSlotKind::HankelFrob: bc = hankel_frobenius(w, n, *slot.variant); break;
                case TheoremSlotKind::HankelSpec:
                    bc = hankel_spectral_bounds(w, n, *slot.variant, opt);
                    break;
                case TheoremSlotKind::HankelOneInf: bc = hankel_one_inf(w, n); break;
            }
            if (!bc.spectral_converged) {
                SpectralOptions retry{cfg.tol, cfg.max_iters * 10, ExecMode::Serial};
                switch (slot.kind) {
                    case TheoremSlotKind::Rcirc:
                        bc = rcirc_bounds(w, n, cfg.scalars[pt.r_idx], retry);
                        break;
                    case TheoremSlotKind::Circ: bc = circulant_report(w, n, retry); break;
                    case TheoremSlotKind::HankelSpec:
                        bc = hankel_spectral_bounds(w, n, *slot.variant, retry);
                        break;
                    default: break;
                }
            }
            outcomes[idx] = summarize(bc);
        } catch (const std::exception& e) {
            errors[idx] = e.what();
        }
    };

    if (mode == ExecMode::Parallel) {
#pragma omp parallel for schedule(dynamic)
        for (long i = 0; i < static_cast<long>(points.size()); ++i) body(static_cast<size_t>(i));
    } else {
        for (size_t i = 0; i < points.size(); ++i) body(i);
    }
    for (const std::string& e : errors)
        if (!e.empty()) throw Error(Errc::Precondition, "bound grid task failed: " + e);

    // Ordered merge per (family, slot); counterexamples take the first
    // failing point in (seed index, n index, r index) order.
    std::vector<VerificationRecord> records;
    for (Family fam : {Family::GeneralizedTribonacci, Family::GeneralizedPellPadovan}) {
        for (size_t slot = 0; slot < slots.size(); ++slot) {
            VerificationRecord rec;
            rec.anchor = theorem_anchor(slots[slot], fam);
            std::optional<std::tuple<size_t, size_t, size_t>> best_key;
            std::optional<size_t> best_idx;
            for (size_t i = 0; i < points.size(); ++i) {
                const BoundPoint& pt = points[i];
                if (pt.fam != fam || pt.slot_idx != slot) continue;
                const BoundOutcome& out = outcomes[i];
                ++rec.points;
                if (out.out_of_hypothesis) ++rec.out_of_hypothesis;
                if (out.nonconverged) ++rec.nonconverged;
                if (out.lemma_divergence) rec.lemma_route_divergence = true;
                if (out.failed) {
                    ++rec.failures;
                    auto key = std::make_tuple(pt.seed_idx, pt.n_idx, pt.r_idx);
                    if (!best_key || key < *best_key) {
                        best_key = key;
                        best_idx = i;
                    }
                }
            }
            if (best_idx) {
                const BoundPoint& pt = points[*best_idx];
                const BoundOutcome& out = outcomes[*best_idx];
                Counterexample ce;
                ce.family = std::string(family_name(fam));
                ce.a = cfg.seeds[pt.seed_idx].a;
                ce.b = cfg.seeds[pt.seed_idx].b;
                ce.c = cfg.seeds[pt.seed_idx].c;
                ce.n = out.n;
                ce.scalar_r = out.scalar_r;
                ce.closed = out.closed;
                ce.oracle = out.oracle;
                rec.counterexample = std::move(ce);
            }
            records.push_back(std::move(rec));
        }
    }
    return records;
}

// ------------------------------------------------------------------ ledger

std::string_view ledger_status_string(LedgerStatus s) {
    switch (s) {
        case LedgerStatus::Confirmed: return "Confirmed";
        case LedgerStatus::TypoCorrected: return "TypoCorrected";
        case LedgerStatus::Invalid: return "Invalid";
    }
    return "?";
}

namespace {

struct FormulaReg {
    const char* anchor;
    bool identity;
    const char* partner;        // corrected sibling anchor, when one exists
    bool claim_level;           // failing as-printed is a false claim, not a typo
    const char* corrected_ref;  // replacement formula, shown on failing rows
};

const std::vector<FormulaReg>& registry() {
    static const std::vector<FormulaReg> reg = {
        {"GEN_SUM", true, nullptr, false, ""},
        {"TRIB_SUM_CLOSED/as-printed", true, "TRIB_SUM_CLOSED/corrected", false,
         "sum R(1..n) = (R(n+3) - R(n+1) - R(2) - R(0)) / 2"},
        {"TRIB_SUM_CLOSED/corrected", true, nullptr, false, ""},
        {"TRIB_SQUARE_SUM", true, nullptr, false, ""},
        {"TRIB_LAG2_PRODUCT/as-printed", true, "TRIB_LAG2_PRODUCT/corrected", false,
         "B_n = ((R(n+1) - R(n-1))^2 - (R(-2) + R(0))^2) / 4"},
        {"TRIB_LAG2_PRODUCT/corrected", true, nullptr, false, ""},
        {"TRIB_ADJ_PRODUCT/as-printed", true, "TRIB_ADJ_PRODUCT/corrected", false,
         "C_n = (B_n - H_n + R(n)^2 + R(n-1)^2 + R(n-2)^2 + R(n-2)(R(n-3) + 2R(n-1) - R(n)) + "
         "2R(n)(R(n-1) + R(n+1)) + b(b - c) - a c) / 2"},
        {"TRIB_ADJ_PRODUCT/corrected", true, nullptr, false, ""},
        {"TRIB_DOUBLE_SUM/as-printed", true, "TRIB_DOUBLE_SUM/corrected", false,
         "M_n = (4C_n - 2H_n + 2B_n - 4nab - a^2 + b^2 - 2b R(-1) + R(n)^2 - R(n+1)^2 + "
         "2R(n+1)R(n-1) + n(R(-2) + a)^2) / 4"},
        {"TRIB_DOUBLE_SUM/corrected", true, nullptr, false, ""},
        {"PP_SUM", true, nullptr, false, ""},
        {"PP_SQUARE_SUM/as-printed", true, "PP_SQUARE_SUM/corrected", false,
         "T = 2a(a - c) + (b - c)^2"},
        {"PP_SQUARE_SUM/corrected", true, nullptr, false, ""},
        {"PP_DOUBLE_SUM/as-printed", true, "PP_DOUBLE_SUM/corrected", false,
         "T = 2a(a - c) + (b - c)^2"},
        {"PP_DOUBLE_SUM/corrected", true, nullptr, false, ""},
        {"TRIB_RCIRC_BOUNDS", false, nullptr, false, ""},
        {"TRIB_CIRC", false, nullptr, false, ""},
        {"TRIB_SEMICIRC/as-printed", false, "TRIB_SEMICIRC/corrected", false,
         "||A||_E^2 = M_n with the corrected double-sum formula"},
        {"TRIB_SEMICIRC/corrected", false, nullptr, false, ""},
        {"TRIB_HANKEL_FROB/as-printed", false, "TRIB_HANKEL_FROB/corrected", false,
         "||A||_E^2 = M(2n-1) - 2M(n-1) with the corrected double-sum formula"},
        {"TRIB_HANKEL_FROB/corrected", false, nullptr, false, ""},
        {"TRIB_HANKEL_SPEC/as-printed", false, "TRIB_HANKEL_SPEC/repaired", true,
         "upper bound r1(M) * c1(N) evaluated from the actual split factors"},
        {"TRIB_HANKEL_SPEC/repaired", false, nullptr, false, ""},
        {"TRIB_HANKEL_ONEINF", false, nullptr, false, ""},
        {"PP_RCIRC_BOUNDS", false, nullptr, false, ""},
        {"PP_CIRC", false, nullptr, false, ""},
        {"PP_SEMICIRC/as-printed", false, "PP_SEMICIRC/corrected", false,
         "double-sum formula with T = 2a(a - c) + (b - c)^2"},
        {"PP_SEMICIRC/corrected", false, nullptr, false, ""},
        {"PP_HANKEL_FROB/as-printed", false, "PP_HANKEL_FROB/corrected", false,
         "S = Z(-2)^2 + Z(-1)^2 + b^2 + c^2 + 2a^2 + 2(T - a^2) with T = 2a(a - c) + (b - c)^2"},
        {"PP_HANKEL_FROB/corrected", false, nullptr, false, ""},
        {"PP_HANKEL_SPEC/as-printed", false, "PP_HANKEL_SPEC/repaired", true,
         "upper bound r1(M) * c1(N) evaluated from the actual split factors"},
        {"PP_HANKEL_SPEC/repaired", false, nullptr, false, ""},
        {"PP_HANKEL_ONEINF", false, nullptr, false, ""},
    };
    return reg;
}

const VerificationRecord* find_record(const std::vector<VerificationRecord>& records,
                                      std::string_view anchor) {
    for (const VerificationRecord& r : records)
        if (r.anchor == anchor) return &r;
    return nullptr;
}

nlohmann::ordered_json counterexample_json(const std::optional<Counterexample>& ce) {
    if (!ce) return nullptr;
    nlohmann::ordered_json j;
    j["family"] = ce->family;
    j["a"] = ce->a;
    j["b"] = ce->b;
    j["c"] = ce->c;
    if (ce->pqr)
        j["pqr"] = {(*ce->pqr)[0], (*ce->pqr)[1], (*ce->pqr)[2]};
    else
        j["pqr"] = nullptr;
    j["n"] = ce->n;
    j["scalar_r"] = ce->scalar_r ? nlohmann::ordered_json(rat_to_string(*ce->scalar_r))
                                 : nlohmann::ordered_json(nullptr);
    j["closed"] = ce->closed;
    j["oracle"] = ce->oracle;
    return j;
}

}  // namespace

std::vector<std::string> registered_anchors() {
    std::vector<std::string> out;
    for (const FormulaReg& reg : registry()) out.emplace_back(reg.anchor);
    return out;
}

ErrataLedger emit_ledger(const std::vector<VerificationRecord>& identity_records,
                         const std::vector<VerificationRecord>& bound_records) {
    ErrataLedger ledger;
    for (const FormulaReg& reg : registry()) {
        const auto& records = reg.identity ? identity_records : bound_records;
        const VerificationRecord* rec = find_record(records, reg.anchor);
        if (!rec || rec->points == 0)
            throw Error(Errc::IncompleteCoverage,
                        std::string("no records for registered formula ") + reg.anchor);
        LedgerEntry entry;
        entry.anchor = reg.anchor;
        if (rec->passed()) {
            entry.status = LedgerStatus::Confirmed;
        } else if (reg.partner) {
            const VerificationRecord* partner = find_record(records, reg.partner);
            if (!partner)
                throw Error(Errc::IncompleteCoverage,
                            std::string("no record for partner formula ") + reg.partner);
            entry.status = partner->passed() && !reg.claim_level ? LedgerStatus::TypoCorrected
                                                                 : LedgerStatus::Invalid;
            if (partner->passed()) entry.corrected_ref = reg.corrected_ref;
        } else {
            entry.status = LedgerStatus::Invalid;
        }
        entry.counterexample = rec->counterexample;
        ledger.entries.push_back(std::move(entry));
    }
    return ledger;
}

std::string ledger_to_json(const ErrataLedger& ledger) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const LedgerEntry& e : ledger.entries) {
        nlohmann::ordered_json j;
        j["anchor"] = e.anchor;
        j["status"] = std::string(ledger_status_string(e.status));
        j["counterexample"] = counterexample_json(e.counterexample);
        j["corrected_ref"] = e.corrected_ref.empty() ? nlohmann::ordered_json(nullptr)
                                                     : nlohmann::ordered_json(e.corrected_ref);
        arr.push_back(std::move(j));
    }
    return arr.dump(2) + "\n";
}

std::string ledger_to_markdown(const ErrataLedger& ledger) {
    std::string out;
    out += "| formula | status | counterexample | corrected form |\n";
    out += "|---|---|---|---|\n";
    for (const LedgerEntry& e : ledger.entries) {
        std::string ce = "-";
        if (e.counterexample) {
            const Counterexample& c = *e.counterexample;
            ce = c.family + " (" + std::to_string(c.a) + "," + std::to_string(c.b) + "," +
                 std::to_string(c.c) + "), n=" + std::to_string(c.n);
            if (c.scalar_r) ce += ", r=" + rat_to_string(*c.scalar_r);
            ce += ": " + c.closed + " vs " + c.oracle;
        }
        out += "| " + e.anchor + " | " + std::string(ledger_status_string(e.status)) + " | " + ce +
               " | " + (e.corrected_ref.empty() ? "-" : e.corrected_ref) + " |\n";
    }
    out +=
        "\nNotes:\n"
        "- The displayed left-circulant pattern is inconsistent from row 3 on; the standard "
        "rule entry(i,j) = row[(i+j) mod n], which matches the first two rows, is used "
        "throughout. No verified formula depends on it.\n"
        "- The symbol A_n in the C_n and M_n formulas is undefined and is read as H_n (the "
        "square sum). Fixing only the product term of C_n (2R(n)(R(n-1)+2R(n+1)) -> "
        "2R(n)(R(n-1)+R(n+1))) still leaves a seed-dependent offset; the confirmed form also "
        "replaces the trailing constant a(R(-1)+c-2b) by b(b-c) - ac.\n"
        "- The r-circulant split-factor displays carry scaled values on parts of the "
        "diagonal, which cannot reproduce the matrix; the clean triangular split (diagonal "
        "u(0) on one factor, 1 on the other) does, and yields exactly the printed r1/c1 "
        "values.\n"
        "- The circulant norm displays write the same constant as -4ab in one place and "
        "-4 R(0)R(1) in another; with seeds (a,b,c) = (R(0),R(1),R(2)) the readings "
        "coincide, so a single evaluation covers both.\n";
    return out;
}

}  // namespace seqmat
