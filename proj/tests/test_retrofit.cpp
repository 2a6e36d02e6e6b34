#include "affembed/retrofit.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <random>
#include <string>
#include <vector>

#include "support/fixtures.hpp"
#include "support/oracles.hpp"

using namespace affembed;
using testsupport::TempDir;

namespace {

AffectLexicon make_lexicon(std::vector<std::pair<std::string, std::vector<double>>> rows) {
    AffectLexicon::EntryMap entries;
    for (auto& [word, values] : rows) {
        Vector v(3);
        for (Index f = 0; f < 3; ++f) v[f] = values[static_cast<std::size_t>(f)];
        entries.emplace(word, std::move(v));
    }
    return AffectLexicon(std::move(entries), 3, 1.0, 9.0);
}

EmbeddingSet make_set(std::vector<std::string> vocab, const std::vector<std::vector<double>>& rows) {
    Matrix m(static_cast<Index>(rows.size()), static_cast<Index>(rows[0].size()));
    for (Index i = 0; i < m.rows(); ++i) {
        for (Index j = 0; j < m.cols(); ++j) {
            m(i, j) = rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
        }
    }
    return EmbeddingSet(std::move(vocab), std::move(m));
}

Ontology make_ontology(const std::vector<std::pair<std::string, std::string>>& edges) {
    Ontology onto;
    for (const auto& [a, b] : edges) onto.add_edge(a, b);
    return onto;
}

}  // namespace

TEST_CASE("load_ontology") {
    TempDir dir;
    SECTION("dedup and symmetry") {
        auto onto = load_ontology(dir.write("onto.txt", "good nice fine\nnice good\n"));
        REQUIRE(onto.edge_count() == 2);
        auto good = onto.index_of("good");
        auto nice = onto.index_of("nice");
        auto fine = onto.index_of("fine");
        REQUIRE(good);
        REQUIRE(onto.neighbors(*good).size() == 2);
        REQUIRE(onto.neighbors(*nice).size() == 1);
        REQUIRE(onto.neighbors(*fine).size() == 1);
        REQUIRE(onto.neighbors(*nice)[0] == *good);
    }
    SECTION("self-loops are dropped and counted") {
        auto onto = load_ontology(dir.write("onto.txt", "a a\na b\n"));
        REQUIRE(onto.self_loops_dropped() == 1);
        REQUIRE(onto.edge_count() == 1);
    }
    SECTION("empty file gives an empty graph, and retrofit is then the identity") {
        auto onto = load_ontology(dir.write("onto.txt", "\n\n"));
        REQUIRE(onto.edge_count() == 0);
        auto set = make_set({"a", "b"}, {{1.0, 2.0}, {3.0, 4.0}});
        auto out = retrofit(set, onto, nullptr, {});
        REQUIRE(out.matrix() == set.matrix());
    }
    SECTION("missing file") {
        REQUIRE_THROWS_AS(load_ontology(dir.path() / "nope.txt"), IoError);
    }
}

TEST_CASE("strength functions reproduce hand-derived values") {
    Vector mid(3), hi(3), lo(3), mixed(3);
    mid << 5, 5, 5;
    hi << 9, 9, 9;
    lo << 1, 1, 1;
    mixed << 7, 3, 5;

    SECTION("identical vectors") {
        REQUIRE(cstrength(mid, mid, 8.0) == 1.0);
        REQUIRE(istrength(mid, mid, 8.0) == 3.0);
    }
    SECTION("opposite scale corners") {
        REQUIRE(std::abs(cstrength(lo, hi, 8.0)) <= 1e-12);
        REQUIRE(std::abs(istrength(lo, hi, 8.0)) <= 1e-12);
    }
    SECTION("mixed vector: 1 - sqrt(8)/sqrt(192) and 0.75+0.75+1") {
        const double expected_c = 1.0 - std::sqrt(8.0) / std::sqrt(192.0);
        REQUIRE(std::abs(cstrength(mid, mixed, 8.0) - expected_c) <= 1e-12);
        REQUIRE(std::round(cstrength(mid, mixed, 8.0) * 1e4) / 1e4 == 0.7959);
        REQUIRE(istrength(mid, mixed, 8.0) == 2.5);
    }
    SECTION("symmetry and bounds on random in-scale vectors") {
        std::mt19937_64 rng(21);
        std::uniform_real_distribution<double> value(1.0, 9.0);
        for (int trial = 0; trial < 200; ++trial) {
            Vector a(3), b(3);
            for (Index f = 0; f < 3; ++f) {
                a[f] = value(rng);
                b[f] = value(rng);
            }
            const double c = cstrength(a, b, 8.0);
            const double i = istrength(a, b, 8.0);
            REQUIRE(c == cstrength(b, a, 8.0));
            REQUIRE(i == istrength(b, a, 8.0));
            REQUIRE(c >= -1e-12);
            REQUIRE(c <= 1.0 + 1e-12);
            REQUIRE(i >= -1e-12);
            REQUIRE(i <= 3.0 + 1e-12);
        }
    }
}

TEST_CASE("retrofit two-word closed form") {
    auto set = make_set({"one", "two"}, {{0.0}, {2.0}});
    auto onto = make_ontology({{"one", "two"}});
    RetrofitConfig cfg;
    cfg.beta_rule = BetaRule::Constant;
    cfg.beta_constant = 1.0;

    SECTION("first sweep uses already-updated neighbors") {
        cfg.iterations = 1;
        auto out = retrofit(set, onto, nullptr, cfg);
        REQUIRE(out.matrix()(0, 0) == 1.0);
        REQUIRE(out.matrix()(1, 0) == 1.5);
    }
    SECTION("sweeps converge to the stationary system's solution") {
        cfg.iterations = 200;
        auto out = retrofit(set, onto, nullptr, cfg);
        REQUIRE(out.matrix()(0, 0) == Catch::Approx(2.0 / 3.0).margin(1e-6));
        REQUIRE(out.matrix()(1, 0) == Catch::Approx(4.0 / 3.0).margin(1e-6));
    }
    SECTION("jacobi mode reaches the same fixed point on a different trajectory") {
        cfg.iterations = 1;
        cfg.mode = SweepMode::Jacobi;
        auto one = retrofit(set, onto, nullptr, cfg);
        REQUIRE(one.matrix()(1, 0) == 1.0);  // uses the pre-sweep value of word one
        cfg.iterations = 400;
        auto out = retrofit(set, onto, nullptr, cfg);
        REQUIRE(out.matrix()(0, 0) == Catch::Approx(2.0 / 3.0).margin(1e-6));
        REQUIRE(out.matrix()(1, 0) == Catch::Approx(4.0 / 3.0).margin(1e-6));
    }
}

TEST_CASE("neighbors outside the vocabulary are ignored") {
    auto set = make_set({"a", "b"}, {{1.0, 0.0}, {0.0, 1.0}});
    SECTION("word whose only neighbors are out of vocabulary stays put") {
        auto onto = make_ontology({{"a", "ghost"}, {"a", "phantom"}});
        auto out = retrofit(set, onto, nullptr, {});
        REQUIRE(out.matrix() == set.matrix());
    }
    SECTION("inverse degree counts only usable neighbors") {
        // a has neighbors b (in vocab) and ghost (not): degree 1, beta = 1
        auto onto = make_ontology({{"a", "b"}, {"a", "ghost"}});
        RetrofitConfig cfg;
        cfg.iterations = 1;
        auto out = retrofit(set, onto, nullptr, cfg);
        // q_a = (1*q_b + 1*qhat_a) / 2 with updated-in-place sweep order a first
        REQUIRE(out.matrix()(0, 0) == 0.5);
        REQUIRE(out.matrix()(0, 1) == 0.5);
    }
}

TEST_CASE("strength coupling") {
    auto set = make_set({"a", "b"}, {{0.0}, {2.0}});
    auto onto = make_ontology({{"a", "b"}});

    SECTION("a shared affect vector makes strength a no-op") {
        auto lex = make_lexicon({{"a", {6, 6, 6}}, {"b", {6, 6, 6}}});
        RetrofitConfig plain;
        RetrofitConfig strong;
        strong.strength = StrengthKind::CStrength;
        auto base = retrofit(set, onto, nullptr, plain);
        auto coupled = retrofit(set, onto, &lex, strong);
        REQUIRE((base.matrix() - coupled.matrix()).cwiseAbs().maxCoeff() <= 1e-12);
    }
    SECTION("missing lexicon is an error") {
        RetrofitConfig cfg;
        cfg.strength = StrengthKind::IStrength;
        REQUIRE_THROWS_AS(retrofit(set, onto, nullptr, cfg), MissingLexiconError);
    }
    SECTION("affect values for ontology words outside the lexicon use the neutral vector") {
        auto lex = make_lexicon({{"a", {5, 5, 5}}});  // b falls back to neutral = [5,5,5]
        RetrofitConfig strong;
        strong.strength = StrengthKind::CStrength;
        RetrofitConfig plain;
        auto coupled = retrofit(set, onto, &lex, strong);
        auto base = retrofit(set, onto, nullptr, plain);
        REQUIRE((base.matrix() - coupled.matrix()).cwiseAbs().maxCoeff() <= 1e-12);
    }
}

TEST_CASE("anchoring dominates for huge alpha") {
    std::mt19937_64 rng(31);
    std::uniform_real_distribution<double> dist(-2.0, 2.0);
    Matrix m(5, 3);
    for (Index i = 0; i < m.rows(); ++i) {
        for (Index j = 0; j < m.cols(); ++j) m(i, j) = dist(rng);
    }
    auto set = EmbeddingSet({"a", "b", "c", "d", "e"}, m);
    auto onto = make_ontology({{"a", "b"}, {"b", "c"}, {"c", "d"}, {"d", "e"}, {"e", "a"}});
    RetrofitConfig cfg;
    cfg.alpha = 1e6;
    cfg.beta_rule = BetaRule::Constant;
    cfg.beta_constant = 1.0;
    cfg.iterations = 50;
    auto out = retrofit(set, onto, nullptr, cfg);
    for (Index i = 0; i < set.size(); ++i) {
        const double rel = (out.row(i) - set.row(i)).norm() / set.row(i).norm();
        REQUIRE(rel <= 1e-4);
    }
}

TEST_CASE("gauss-seidel limit matches the direct linear solve") {
    std::mt19937_64 rng(41);
    std::uniform_real_distribution<double> dist(-2.0, 2.0);
    for (int trial = 0; trial < 10; ++trial) {
        const Index n = 3 + static_cast<Index>(rng() % 4);
        const Index d = 1 + static_cast<Index>(rng() % 3);
        Matrix m(n, d);
        for (Index i = 0; i < n; ++i) {
            for (Index j = 0; j < d; ++j) m(i, j) = dist(rng);
        }
        std::vector<std::string> vocab;
        for (Index i = 0; i < n; ++i) vocab.push_back("w" + std::to_string(i));
        EmbeddingSet set(vocab, m);

        testsupport::RetrofitInstance inst;
        inst.anchors = m;
        inst.neighbors.assign(static_cast<std::size_t>(n), {});
        Ontology onto;
        for (Index i = 0; i < n; ++i) {
            for (Index j = i + 1; j < n; ++j) {
                if (rng() % 2 == 0) continue;
                if (onto.add_edge(vocab[static_cast<std::size_t>(i)],
                                  vocab[static_cast<std::size_t>(j)])) {
                    inst.neighbors[static_cast<std::size_t>(i)].push_back(j);
                    inst.neighbors[static_cast<std::size_t>(j)].push_back(i);
                }
            }
        }
        inst.inverse_degree = trial % 2 == 0;
        inst.beta_constant = 0.8;

        RetrofitConfig cfg;
        cfg.beta_rule = inst.inverse_degree ? BetaRule::InverseDegree : BetaRule::Constant;
        cfg.beta_constant = inst.beta_constant;
        cfg.iterations = 300;
        auto out = retrofit(set, onto, nullptr, cfg);
        testsupport::Mat expected = testsupport::retrofit_solve_oracle(inst);
        REQUIRE((out.matrix() - expected).cwiseAbs().maxCoeff() <= 1e-8);
    }
}

TEST_CASE("early stop on a convergence tolerance") {
    auto set = make_set({"one", "two"}, {{0.0}, {2.0}});
    auto onto = make_ontology({{"one", "two"}});
    RetrofitConfig cfg;
    cfg.beta_rule = BetaRule::Constant;
    cfg.iterations = 100000;
    cfg.convergence_tol = 1e-12;
    auto out = retrofit(set, onto, nullptr, cfg);  // finishes far before the sweep cap
    REQUIRE(out.matrix()(0, 0) == Catch::Approx(2.0 / 3.0).margin(1e-10));
}

TEST_CASE("objective") {
    SECTION("no edges and unchanged vectors give zero") {
        auto set = make_set({"a", "b"}, {{1.0}, {2.0}});
        Ontology onto;
        REQUIRE(objective(set, set, onto, nullptr, {}) == 0.0);
    }
    SECTION("one edge counts once at the symmetrized weight") {
        auto set = make_set({"a", "b"}, {{0.0}, {2.0}});
        auto onto = make_ontology({{"a", "b"}});
        RetrofitConfig cfg;
        cfg.beta_rule = BetaRule::Constant;
        cfg.beta_constant = 1.0;
        REQUIRE(objective(set, set, onto, nullptr, cfg) == 4.0);
    }
    SECTION("the update minimizes the objective one word at a time") {
        // with symmetric weights, a single-word update must land at the
        // coordinate minimum: perturbing the updated word only increases psi
        auto set = make_set({"a", "b"}, {{0.0}, {2.0}});
        auto onto = make_ontology({{"a", "b"}});
        RetrofitConfig cfg;
        cfg.beta_rule = BetaRule::Constant;
        cfg.beta_constant = 1.0;
        cfg.iterations = 1;
        auto swept = retrofit(set, onto, nullptr, cfg);
        const double at_update = objective(set, swept, onto, nullptr, cfg);
        for (double shift : {-0.1, -1e-3, 1e-3, 0.1}) {
            Matrix q = swept.matrix();
            q(1, 0) += shift;  // word b was updated last
            EmbeddingSet perturbed(swept.vocab(), q);
            REQUIRE(objective(set, perturbed, onto, nullptr, cfg) > at_update);
        }
    }
    SECTION("shape mismatch is rejected") {
        auto a = make_set({"a", "b"}, {{1.0}, {2.0}});
        auto b = make_set({"a", "c"}, {{1.0}, {2.0}});
        Ontology onto;
        REQUIRE_THROWS_AS(objective(a, b, onto, nullptr, {}), ShapeMismatchError);
    }
}

TEST_CASE("sweeps descend the objective when edge weights are symmetric") {
    std::mt19937_64 rng(51);
    std::uniform_real_distribution<double> dist(-2.0, 2.0);
    std::uniform_real_distribution<double> value(1.0, 9.0);
    for (int trial = 0; trial < 6; ++trial) {
        const Index n = 3 + static_cast<Index>(rng() % 4);
        Matrix m(n, 2);
        for (Index i = 0; i < n; ++i) {
            for (Index j = 0; j < 2; ++j) m(i, j) = dist(rng);
        }
        std::vector<std::string> vocab;
        for (Index i = 0; i < n; ++i) vocab.push_back("w" + std::to_string(i));
        EmbeddingSet set(vocab, m);

        Ontology onto;
        for (Index i = 0; i < n; ++i) {
            for (Index j = i + 1; j < n; ++j) {
                if (rng() % 2 == 0) {
                    onto.add_edge(vocab[static_cast<std::size_t>(i)],
                                  vocab[static_cast<std::size_t>(j)]);
                }
            }
        }
        AffectLexicon::EntryMap entries;
        for (const auto& w : vocab) {
            Vector v(3);
            for (Index f = 0; f < 3; ++f) v[f] = value(rng);
            entries.emplace(w, std::move(v));
        }
        AffectLexicon lex(std::move(entries), 3, 1.0, 9.0);

        RetrofitConfig cfg;
        cfg.beta_rule = BetaRule::Constant;
        cfg.beta_constant = trial % 2 == 0 ? 1.0 : 0.35;
        cfg.strength = trial % 3 == 0   ? StrengthKind::None
                       : trial % 3 == 1 ? StrengthKind::CStrength
                                        : StrengthKind::IStrength;
        const AffectLexicon* lp = cfg.strength == StrengthKind::None ? nullptr : &lex;

        double prev = objective(set, set, onto, lp, cfg);
        for (int t = 1; t <= 12; ++t) {
            cfg.iterations = t;
            auto q = retrofit(set, onto, lp, cfg);
            const double cur = objective(set, q, onto, lp, cfg);
            REQUIRE(cur <= prev + 1e-9);
            prev = cur;
        }
    }
}

TEST_CASE("inverse-degree sweeps are not coordinate descent on the objective") {
    // With asymmetric weights (1/deg on a degree-irregular graph) the per-word
    // update minimizes a different quadratic than the objective's coordinate
    // restriction, so the sweep sequence can pass below the stationary point's
    // objective value and climb back up to it.
    auto set = make_set({"a", "b", "c"}, {{0.0}, {0.0}, {1.0}});
    auto onto = make_ontology({{"a", "b"}, {"b", "c"}});
    RetrofitConfig cfg;
    cfg.beta_rule = BetaRule::InverseDegree;

    std::vector<double> psi;
    for (int t = 1; t <= 8; ++t) {
        cfg.iterations = t;
        auto q = retrofit(set, onto, nullptr, cfg);
        psi.push_back(objective(set, q, onto, nullptr, cfg));
    }
    double max_rise = 0.0;
    for (std::size_t t = 1; t < psi.size(); ++t) {
        max_rise = std::max(max_rise, psi[t] - psi[t - 1]);
    }
    REQUIRE(max_rise > 1e-4);  // sweep 3 rises by about 4.1e-4 on this fixture
}

TEST_CASE("config validation") {
    RetrofitConfig cfg;
    cfg.alpha = 0.0;
    REQUIRE_THROWS_AS(cfg.validate(), ValidationError);
    cfg = {};
    cfg.iterations = 0;
    REQUIRE_THROWS_AS(cfg.validate(), ValidationError);
    cfg = {};
    cfg.beta_rule = BetaRule::Constant;
    cfg.beta_constant = -1.0;
    REQUIRE_THROWS_AS(cfg.validate(), ValidationError);
    cfg = {};
    cfg.convergence_tol = 0.0;
    REQUIRE_THROWS_AS(cfg.validate(), ValidationError);
}
