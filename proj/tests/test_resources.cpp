#include <doctest.h>

#include <random>

#include "ruleqa/errors.hpp"
#include "ruleqa/resources.hpp"
#include "test_util.hpp"

using namespace ruleqa;

TEST_CASE("embeddings: minimal well-formed file") {
  testutil::TempFile f("alpha 1 0 0\nbeta 0 1 0\n");
  auto store = EmbeddingStore::load(f.path);
  CHECK(store.dimension() == 3);
  CHECK(store.size() == 2);
  CHECK(store.lookup("alpha").size() == 3);
  CHECK(store.lookup("ALPHA").size() == 3);  // case-insensitive
  CHECK(store.lookup("gamma").empty());
}

TEST_CASE("embeddings: arity mismatch is a format error") {
  testutil::TempFile f("alpha 1 0 0\nbeta 0 1\n");
  CHECK_THROWS_AS(EmbeddingStore::load(f.path), FormatError);
}

TEST_CASE("embeddings: duplicate token keeps the first vector") {
  testutil::TempFile f("the 1 0\nthe 0 1\n");
  auto store = EmbeddingStore::load(f.path);
  REQUIRE(store.size() == 1);
  auto v = store.lookup("the");
  CHECK(v[0] == doctest::Approx(1.0));
  CHECK(v[1] == doctest::Approx(0.0));
}

TEST_CASE("embeddings: empty file rejected") {
  testutil::TempFile f("");
  CHECK_THROWS_AS(EmbeddingStore::load(f.path), EmptyFile);
}

TEST_CASE("cosine: identity, orthogonality, collinearity") {
  std::vector<float> v{3, 4, 12};
  CHECK(cosine(v, v) == doctest::Approx(1.0));
  std::vector<float> e1{1, 0}, e2{0, 1};
  CHECK(cosine(e1, e2) == doctest::Approx(0.0));
  std::vector<float> a{1, 2}, b{2, 4};
  CHECK(cosine(a, b) == doctest::Approx(1.0));
}

TEST_CASE("cosine: zero vector and dimension mismatch") {
  std::vector<float> z{0, 0}, v{1, 1}, w{1, 1, 1};
  CHECK(cosine(z, v) == 0.0);
  CHECK_THROWS_AS(cosine(v, w), DimensionMismatch);
}

TEST_CASE("cosine: symmetry, bounds and scaling invariance (1000 random pairs)") {
  std::mt19937 rng(20240811);
  std::uniform_real_distribution<float> dist(-4.0f, 4.0f);
  for (int it = 0; it < 1000; ++it) {
    std::vector<float> a(8), b(8), b4(8);
    for (int i = 0; i < 8; ++i) {
      a[i] = dist(rng);
      b[i] = dist(rng);
      b4[i] = 4.0f * b[i];  // power-of-two scale: exact in float
    }
    double ab = cosine(a, b);
    CHECK(std::abs(ab) <= 1.0 + 1e-9);
    CHECK(cosine(b, a) == doctest::Approx(ab).epsilon(1e-12));
    CHECK(cosine(a, b4) == doctest::Approx(ab).epsilon(1e-9));
  }
}

TEST_CASE("synonyms: direct lookup and misses") {
  testutil::TempFile f("rise\tv\tascend,climb\n", ".tsv");
  auto lex = SynonymLexicon::load(f.path);
  CHECK(lex.synonyms("rise", 'v') == std::vector<std::string>{"ascend", "climb"});
  CHECK(lex.synonyms("fall", 'v').empty());
  CHECK(lex.synonyms("rise", 'n').empty());
}

TEST_CASE("synonyms: wildcard unions all pos classes") {
  testutil::TempFile f("fame\tn\trenown,celebrity\nlight\tn\tlamp\nlight\tv\tignite\n", ".tsv");
  auto lex = SynonymLexicon::load(f.path);
  CHECK(lex.synonyms("fame", '*') == std::vector<std::string>{"renown", "celebrity"});
  auto all = lex.synonyms("light", '*');
  CHECK(all == std::vector<std::string>{"lamp", "ignite"});
}

TEST_CASE("synonyms: query lemma never returned") {
  testutil::TempFile f("big\ta\tlarge,big,huge\n", ".tsv");
  auto lex = SynonymLexicon::load(f.path);
  CHECK(lex.synonyms("big", 'a') == std::vector<std::string>{"large", "huge"});
}

TEST_CASE("stopwords: load and membership") {
  testutil::TempFile f("# comment\nthe\nof\nand\n");
  auto sw = StopwordList::load(f.path);
  CHECK(sw.size() == 3);
  CHECK(sw.contains("the"));
  CHECK(sw.contains("The"));
  CHECK_FALSE(sw.contains("fame"));
  testutil::TempFile empty("# only a comment\n");
  CHECK_THROWS_AS(StopwordList::load(empty.path), EmptyFile);
}

TEST_CASE("pos_class_of maps treebank tags to synonym classes") {
  CHECK(pos_class_of("NN") == 'n');
  CHECK(pos_class_of("NNS") == 'n');
  CHECK(pos_class_of("NNP") == 'n');
  CHECK(pos_class_of("VB") == 'v');
  CHECK(pos_class_of("VBD") == 'v');
  CHECK(pos_class_of("JJ") == 'a');
  CHECK(pos_class_of("RB") == 'r');
  CHECK(pos_class_of("CD") == '*');
}

TEST_CASE("bundled mini pack loads and is coherent") {
  const auto& p = testutil::pack();
  CHECK(p.embeddings.size() > 0);
  CHECK(p.embeddings.dimension() == 8);
  CHECK(p.synonyms.size() > 0);
  CHECK(p.stopwords.contains("the"));
  CHECK(p.annotator.loaded());
  // clusters used by the embedding criterion stay above the default threshold
  CHECK(cosine(p.embeddings.lookup("song"), p.embeddings.lookup("melody")) >= 0.6);
  CHECK(cosine(p.embeddings.lookup("song"), p.embeddings.lookup("table")) < 0.6);
}
