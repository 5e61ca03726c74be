#include "antimagic/constructions.hpp"

#include <stdexcept>
#include <utility>

namespace antimagic {

std::string method_tag_name(MethodTag tag) {
    switch (tag) {
        case MethodTag::EvenS2: return "even-s2";
        case MethodTag::EvenGeneral: return "even-general";
        case MethodTag::OddP3: return "odd-p3";
        case MethodTag::OddP5: return "odd-p5";
        case MethodTag::OddGeneral: return "odd-general";
        case MethodTag::TwoStars: return "two-stars";
        case MethodTag::SearchFallback: return "search-fallback";
    }
    return "?";
}

std::vector<int> pendant_subset(int s, int epsilon) {
    if (s < 2) throw std::invalid_argument("pendant_subset: s must be >= 2");
    if (epsilon < 0 || epsilon > s * s)
        throw std::invalid_argument("pendant_subset: epsilon outside 0..s^2");

    const int q = epsilon / s;
    const int r = epsilon % s;
    std::vector<int> subset;
    subset.reserve(static_cast<size_t>(s));
    for (int x = 1; x <= s - q - 1; ++x) subset.push_back(x);
    if (q < s) subset.push_back(s - q + r);
    for (int x = 2 * s - q + 1; x <= 2 * s; ++x) subset.push_back(x);
    return subset;
}

namespace {

std::vector<int> subset_complement(int s, const std::vector<int>& subset) {
    std::vector<bool> in(static_cast<size_t>(2 * s) + 1, false);
    for (int x : subset) in[static_cast<size_t>(x)] = true;
    std::vector<int> out;
    out.reserve(static_cast<size_t>(s));
    for (int x = 1; x <= 2 * s; ++x)
        if (!in[static_cast<size_t>(x)]) out.push_back(x);
    return out;
}

EdgeLabeling blank_labeling(const ProductParams& p) {
    EdgeLabeling l;
    l.labels.assign(static_cast<size_t>(p.edge_count()), 0);
    return l;
}

void set_label(EdgeLabeling& l, int edge_id, std::int64_t value) {
    l.labels[static_cast<size_t>(edge_id)] = value;
}

} // namespace

EdgeLabeling label_even_s2(int m) {
    if (m < 1) throw std::invalid_argument("label_even_s2: m must be >= 1");
    const ProductParams p = ProductParams::checked(2, 2 * m + 2);
    const StarPathLayout L(p);
    EdgeLabeling f = blank_labeling(p);

    for (int j = 1; j <= 2; ++j) {
        set_label(f, L.edge_a_down(0, j), 2 + j);
        set_label(f, L.edge_b_down(0, j), j);
    }
    for (int i = 1; i <= m; ++i)
        for (int j = 1; j <= 2; ++j) {
            set_label(f, L.edge_b_up(i, j), 3 + 2 * i + 4 * m * (j - 1));
            set_label(f, L.edge_b_down(i, j), 4 + 2 * i + 4 * m * (j - 1));
            set_label(f, L.edge_a_up(i, j), 3 + 2 * i + 2 * m * (2 * j - 1));
            set_label(f, L.edge_a_down(i, j), 4 + 2 * i + 2 * m * (2 * j - 1));
        }
    return f;
}

EdgeLabeling label_even_general(int s, int m, int epsilon) {
    if (s < 3) throw std::invalid_argument("label_even_general: s must be >= 3");
    if (m < 1) throw std::invalid_argument("label_even_general: m must be >= 1");
    const std::vector<int> a_side = pendant_subset(s, epsilon);
    const std::vector<int> b_side = subset_complement(s, a_side);

    const ProductParams p = ProductParams::checked(s, 2 * m + 2);
    const StarPathLayout L(p);
    EdgeLabeling f = blank_labeling(p);

    for (int j = 1; j <= s; ++j) {
        set_label(f, L.edge_a_down(0, j), a_side[static_cast<size_t>(j - 1)]);
        set_label(f, L.edge_b_down(0, j), b_side[static_cast<size_t>(j - 1)]);
    }
    for (int i = 1; i <= m; ++i) {
        const bool odd = i % 2 == 1;
        for (int j = 1; j <= s; ++j) {
            const int lo = 2 * j - 1 + 2 * i * s;
            const int hi = 2 * j + 2 * i * s;
            set_label(f, L.edge_a_up(i, j), odd ? lo : hi);
            set_label(f, L.edge_a_down(i, j), odd ? hi : lo);
            set_label(f, L.edge_b_up(i, j), (odd ? lo : hi) + 2 * m * s);
            set_label(f, L.edge_b_down(i, j), (odd ? hi : lo) + 2 * m * s);
        }
    }
    return f;
}

EdgeLabeling label_odd_p3(int s) {
    if (s < 2) throw std::invalid_argument("label_odd_p3: s must be >= 2");
    const ProductParams p = ProductParams::checked(s, 3);
    const StarPathLayout L(p);
    EdgeLabeling f = blank_labeling(p);

    for (int j = 1; j <= s; ++j) {
        set_label(f, L.edge_a_down(0, j), j);
        set_label(f, L.edge_a_up(1, j), s + j);
        set_label(f, L.edge_b_down(1, j), 2 * s + 2 * j - 1);
        set_label(f, L.edge_b_up(1, j), 2 * s + 2 * j);
    }
    return f;
}

EdgeLabeling label_odd_p5(int s) {
    if (s < 2) throw std::invalid_argument("label_odd_p5: s must be >= 2");
    const ProductParams p = ProductParams::checked(s, 5);
    const StarPathLayout L(p);
    EdgeLabeling f = blank_labeling(p);

    for (int j = 1; j <= s; ++j) {
        set_label(f, L.edge_a_down(0, j), j);
        set_label(f, L.edge_a_up(2, j), s + j);
        set_label(f, L.edge_a_down(1, j), 2 * s + 2 * j - 1);
        set_label(f, L.edge_a_up(1, j), 2 * s + 2 * j);
        set_label(f, L.edge_b_down(1, j), 4 * s + 2 * j - 1);
        set_label(f, L.edge_b_up(1, j), 4 * s + 2 * j);
        set_label(f, L.edge_b_up(2, j), 6 * s + 2 * j - 1);
        set_label(f, L.edge_b_down(2, j), 6 * s + 2 * j);
    }
    if (s == 2) {
        // At s = 2 the family ties wt(v_1) = wt(b_1^1) = 8s + 3 = 19
        // ((9s^2+s)/2 hits 8s+4j-1 at j = (9s^2-15s+2)/8, an integer in
        // 1..s only for s = 2). Transposing these two labels separates
        // them and leaves wt(v_0) and wt(u_1) unchanged.
        std::swap(f.labels[static_cast<size_t>(L.edge_a_up(2, 1))],
                  f.labels[static_cast<size_t>(L.edge_b_up(1, 2))]);
    }
    return f;
}

EdgeLabeling label_odd_general(int s, int m, int epsilon) {
    if (s < 2) throw std::invalid_argument("label_odd_general: s must be >= 2");
    if (m < 3) throw std::invalid_argument("label_odd_general: m must be >= 3");
    const std::vector<int> a0_side = pendant_subset(s, epsilon);
    const std::vector<int> am_side = subset_complement(s, a0_side);

    const ProductParams p = ProductParams::checked(s, 2 * m + 1);
    const StarPathLayout L(p);
    EdgeLabeling f = blank_labeling(p);

    for (int j = 1; j <= s; ++j) {
        set_label(f, L.edge_a_down(0, j), a0_side[static_cast<size_t>(j - 1)]);
        set_label(f, L.edge_a_up(m, j), am_side[static_cast<size_t>(j - 1)]);
    }
    for (int i = 1; i <= m - 1; ++i) {
        const bool odd = i % 2 == 1;
        for (int j = 1; j <= s; ++j) {
            const int hi = 2 * j + 2 * i * s;
            const int lo = hi - 1;
            set_label(f, L.edge_a_up(i, j), odd ? hi : lo);
            set_label(f, L.edge_a_down(i, j), odd ? lo : hi);
        }
    }
    for (int i = 1; i <= m; ++i) {
        const bool odd = i % 2 == 1;
        for (int j = 1; j <= s; ++j) {
            const int hi = 2 * j + 2 * i * s + 2 * (m - 1) * s;
            const int lo = hi - 1;
            set_label(f, L.edge_b_up(i, j), odd ? hi : lo);
            set_label(f, L.edge_b_down(i, j), odd ? lo : hi);
        }
    }
    return f;
}

EpsilonSelection select_epsilon(int s, int m, PathParity parity) {
    const bool even = parity == PathParity::Even;
    if (even && s < 3)
        throw std::invalid_argument("select_epsilon: even family needs s >= 3");
    if (!even && s < 2)
        throw std::invalid_argument("select_epsilon: odd family needs s >= 2");
    if (even && m < 1)
        throw std::invalid_argument("select_epsilon: even family needs m >= 1");
    if (!even && m < 3)
        throw std::invalid_argument("select_epsilon: odd family needs m >= 3");

    const Graph g = product_star_path(
        ProductParams::checked(s, even ? 2 * m + 2 : 2 * m + 1));
    for (int epsilon = 0; epsilon <= s * s; ++epsilon) {
        EdgeLabeling f = even ? label_even_general(s, m, epsilon)
                              : label_odd_general(s, m, epsilon);
        if (is_antimagic_labeling(g, f).pass)
            return {epsilon, std::move(f), epsilon > 3};
    }
    throw std::runtime_error(
        "select_epsilon: no epsilon in 0..s^2 verified for s=" +
        std::to_string(s) + " m=" + std::to_string(m) +
        " (this contradicts the existence argument)");
}

EdgeLabeling label_two_stars(int s) {
    if (s < 3) throw std::invalid_argument("label_two_stars: s must be >= 3");
    const ProductParams p = ProductParams::checked(s, 2);
    const StarPathLayout L(p);
    EdgeLabeling f = blank_labeling(p);

    // Star A: {1..s-1} plus 2s; star B: the middle run {s..2s-1}. Hub
    // weights s(s+3)/2 and s(3s-1)/2 coincide only at s = 2.
    for (int j = 1; j <= s - 1; ++j) set_label(f, L.edge_a_down(0, j), j);
    set_label(f, L.edge_a_down(0, s), 2 * s);
    for (int j = 1; j <= s; ++j) set_label(f, L.edge_b_down(0, j), s + j - 1);

    const Graph g = product_star_path(p);
    if (!is_antimagic_labeling(g, f).pass)
        throw std::logic_error("label_two_stars: verification failed for s=" +
                               std::to_string(s));
    return f;
}

namespace {

ConstructionOutcome from_search(const SearchResult& r) {
    ConstructionOutcome out{};
    switch (r.kind) {
        case SearchResult::Kind::Antimagic:
            out.kind = ConstructionOutcome::Kind::Antimagic;
            out.labeling = r.witness;
            out.method = MethodTag::SearchFallback;
            break;
        case SearchResult::Kind::NotAntimagic:
            out.kind = ConstructionOutcome::Kind::NotAntimagic;
            out.certificate = r.certificate;
            break;
        case SearchResult::Kind::Unknown:
            out.kind = ConstructionOutcome::Kind::Unknown;
            out.budget_report = r.report;
            break;
    }
    return out;
}

ConstructionOutcome antimagic_outcome(EdgeLabeling f, MethodTag tag,
                                      std::optional<int> epsilon) {
    ConstructionOutcome out{};
    out.kind = ConstructionOutcome::Kind::Antimagic;
    out.labeling = std::move(f);
    out.method = tag;
    out.epsilon = epsilon;
    return out;
}

bool is_exception(int s, int n) {
    return (s == 1 && n == 2) || (s == 1 && n == 3) || (s == 2 && n == 2);
}

} // namespace

ConstructionOutcome construct(const ProductParams& p, const SearchBudget& budget) {
    ProductParams::checked(p.s, p.n);
    const int s = p.s, n = p.n, m = p.m();

    ConstructionOutcome out{};
    if (is_exception(s, n)) {
        out = from_search(
            find_antimagic(product_star_path(p), SearchBudget::exhaustive(budget.max_nodes)));
    } else if (s == 1) {
        SearchBudget b = budget;
        b.mode = p.edge_count() <= 12 ? SearchBudget::Mode::Exhaustive
                                      : SearchBudget::Mode::Backtracking;
        out = from_search(find_antimagic(product_star_path(p), b));
    } else if (n == 2) {
        out = antimagic_outcome(label_two_stars(s), MethodTag::TwoStars, {});
    } else if (n % 2 == 0) {
        if (s == 2) {
            out = antimagic_outcome(label_even_s2(m), MethodTag::EvenS2, {});
        } else {
            EpsilonSelection sel = select_epsilon(s, m, PathParity::Even);
            out = antimagic_outcome(std::move(sel.labeling),
                                    MethodTag::EvenGeneral, sel.epsilon);
        }
    } else if (n == 3) {
        out = antimagic_outcome(label_odd_p3(s), MethodTag::OddP3, {});
    } else if (n == 5) {
        out = antimagic_outcome(label_odd_p5(s), MethodTag::OddP5, {});
    } else {
        EpsilonSelection sel = select_epsilon(s, m, PathParity::Odd);
        out = antimagic_outcome(std::move(sel.labeling), MethodTag::OddGeneral,
                                sel.epsilon);
    }

    if (out.kind == ConstructionOutcome::Kind::Antimagic) {
        const Graph g = product_star_path(p);
        if (!is_antimagic_labeling(g, *out.labeling).pass)
            throw std::logic_error("construct: outcome failed re-verification at s=" +
                                   std::to_string(s) + " n=" + std::to_string(n));
    }
    return out;
}

ConstructionOutcome construct(const ProductParams& p) {
    return construct(p, SearchBudget{});
}

} // namespace antimagic
