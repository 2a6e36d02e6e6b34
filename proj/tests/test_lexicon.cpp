#include "affembed/lexicon.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <string>

#include "affembed/embedding_io.hpp"
#include "support/fixtures.hpp"

using namespace affembed;
using testsupport::TempDir;

namespace {

constexpr const char* kWarrinerStyle =
    "Word,V.Mean.Sum,A.Mean.Sum,D.Mean.Sum\n"
    "happy,8.47,6.05,7.21\n"
    "sad,2.10,3.49,3.84\n"
    "table,5.00,2.90,6.10\n";

EmbeddingSet tiny_set(std::vector<std::string> vocab) {
    Matrix m = Matrix::Identity(static_cast<Index>(vocab.size()),
                                static_cast<Index>(vocab.size()));
    return EmbeddingSet(std::move(vocab), std::move(m));
}

}  // namespace

TEST_CASE("load by header names") {
    TempDir dir;
    auto path = dir.write("lex.csv", kWarrinerStyle);
    auto lex = load_lexicon(path);
    REQUIRE(lex.size() == 3);
    REQUIRE(lex.dims() == 3);
    const Vector& happy = lex.affect_vector("happy");
    REQUIRE(happy[0] == 8.47);
    REQUIRE(happy[1] == 6.05);
    REQUIRE(happy[2] == 7.21);
}

TEST_CASE("tab-separated files auto-detect") {
    TempDir dir;
    auto path = dir.write("lex.tsv",
                          "Word\tV.Mean.Sum\tA.Mean.Sum\tD.Mean.Sum\n"
                          "calm\t6.9\t1.7\t6.2\n");
    auto lex = load_lexicon(path);
    REQUIRE(lex.contains("calm"));
    REQUIRE(lex.affect_vector("calm")[1] == 1.7);
}

TEST_CASE("index-based columns without a header") {
    TempDir dir;
    auto path = dir.write("lex.csv", "happy,8.47,6.05,7.21\nsad,2.10,3.49,3.84\n");
    LexiconLoadOptions options;
    options.columns = ColumnSpec::indices(0, {1, 2, 3});
    auto lex = load_lexicon(path, options);
    REQUIRE(lex.size() == 2);
    REQUIRE(lex.affect_vector("sad")[2] == 3.84);
}

TEST_CASE("value outside the scale is rejected") {
    TempDir dir;
    auto path = dir.write("lex.csv",
                          "Word,V.Mean.Sum,A.Mean.Sum,D.Mean.Sum\nodd,9.5,5,5\n");
    try {
        load_lexicon(path);
        FAIL("expected OutOfScaleError");
    } catch (const OutOfScaleError& e) {
        REQUIRE(e.word() == "odd");
        REQUIRE(e.dim() == 0);
        REQUIRE(e.value() == 9.5);
    }
}

TEST_CASE("duplicate lexicon rows are a hard error") {
    TempDir dir;
    auto path = dir.write("lex.csv",
                          "Word,V.Mean.Sum,A.Mean.Sum,D.Mean.Sum\na,5,5,5\na,6,6,6\n");
    REQUIRE_THROWS_AS(load_lexicon(path), DuplicateWordError);
}

TEST_CASE("parse failures") {
    TempDir dir;
    SECTION("missing column in header") {
        auto path = dir.write("lex.csv", "Word,V.Mean.Sum,A.Mean.Sum\nhappy,8,6\n");
        REQUIRE_THROWS_AS(load_lexicon(path), ParseError);
    }
    SECTION("short row") {
        auto path = dir.write("lex.csv",
                              "Word,V.Mean.Sum,A.Mean.Sum,D.Mean.Sum\nhappy,8\n");
        REQUIRE_THROWS_AS(load_lexicon(path), ParseError);
    }
    SECTION("non-numeric value") {
        auto path = dir.write("lex.csv",
                              "Word,V.Mean.Sum,A.Mean.Sum,D.Mean.Sum\nhappy,high,6,7\n");
        REQUIRE_THROWS_AS(load_lexicon(path), ParseError);
    }
    SECTION("nan value") {
        auto path = dir.write("lex.csv",
                              "Word,V.Mean.Sum,A.Mean.Sum,D.Mean.Sum\nhappy,nan,6,7\n");
        REQUIRE_THROWS_AS(load_lexicon(path), ParseError);
    }
    SECTION("missing file") {
        REQUIRE_THROWS_AS(load_lexicon(dir.path() / "nope.csv"), IoError);
    }
}

TEST_CASE("unknown words get the neutral vector") {
    TempDir dir;
    auto lex = load_lexicon(dir.write("lex.csv", kWarrinerStyle));
    const Vector& v = lex.affect_vector("xyzzy");
    REQUIRE(v.size() == 3);
    REQUIRE(v[0] == 5.0);
    REQUIRE(v[1] == 5.0);
    REQUIRE(v[2] == 5.0);
}

TEST_CASE("neutral is the scale midpoint, not a hard-coded 5") {
    TempDir dir;
    auto path = dir.write("lex.csv", "Word,a,b\nw,0.25,0.75\n");
    LexiconLoadOptions options;
    options.columns = ColumnSpec::names("Word", {"a", "b"});
    options.scale_min = 0.0;
    options.scale_max = 1.0;
    auto lex = load_lexicon(path, options);
    REQUIRE(lex.affect_vector("unknown")[0] == 0.5);
    REQUIRE(lex.affect_vector("unknown")[1] == 0.5);
    REQUIRE(lex.max_dist() == 1.0);
}

TEST_CASE("lowercase flag folds words at load time") {
    TempDir dir;
    auto path = dir.write("lex.csv", "Word,V.Mean.Sum,A.Mean.Sum,D.Mean.Sum\nHappy,8,6,7\n");
    LexiconLoadOptions options;
    options.lowercase_words = true;
    auto lex = load_lexicon(path, options);
    REQUIRE(lex.contains("happy"));
    REQUIRE_FALSE(lex.contains("Happy"));
}

TEST_CASE("affect_vector is total and scale-closed") {
    TempDir dir;
    auto lex = load_lexicon(dir.write("lex.csv", kWarrinerStyle));
    std::mt19937_64 rng(3);
    for (int i = 0; i < 200; ++i) {
        std::string word;
        for (int c = 0; c < 1 + static_cast<int>(rng() % 8); ++c) {
            word.push_back(static_cast<char>('a' + rng() % 26));
        }
        const Vector& v = lex.affect_vector(word);
        REQUIRE(v.size() == lex.dims());
        for (Index f = 0; f < v.size(); ++f) {
            REQUIRE(v[f] >= lex.scale_min());
            REQUIRE(v[f] <= lex.scale_max());
        }
    }
}

TEST_CASE("fallback identity: neutral comes back exactly for misses only") {
    // no fixture entry equals the neutral vector, so equality identifies misses
    TempDir dir;
    auto lex = load_lexicon(dir.write("lex.csv", kWarrinerStyle));
    for (const char* word : {"happy", "sad", "table"}) {
        REQUIRE(lex.contains(word));
        REQUIRE(lex.affect_vector(word) != lex.neutral());
    }
    REQUIRE(lex.affect_vector("missing") == lex.neutral());
}

TEST_CASE("coverage") {
    TempDir dir;
    auto lex = load_lexicon(dir.write("lex.csv", kWarrinerStyle));
    REQUIRE(coverage(lex, tiny_set({"q", "z"})) == 0.0);
    REQUIRE(coverage(lex, tiny_set({"happy", "sad", "table"})) == 1.0);
    REQUIRE(coverage(lex, tiny_set({"happy", "sad", "q", "z"})) == 0.5);
}

TEST_CASE("lexicon construction validates scale metadata") {
    AffectLexicon::EntryMap empty;
    REQUIRE_THROWS_AS(AffectLexicon(std::move(empty), 3, 9.0, 1.0), ValidationError);
    AffectLexicon::EntryMap empty2;
    REQUIRE_THROWS_AS(AffectLexicon(std::move(empty2), 0, 1.0, 9.0), ValidationError);
}
