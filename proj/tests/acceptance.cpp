// Acceptance suite: one pass/fail line per criterion, exit 0 iff all pass.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "generators.hpp"
#include "laycheck/checker.hpp"
#include "laycheck/corpus.hpp"
#include "laycheck/dsl.hpp"
#include "laycheck/oracle.hpp"
#include "laycheck/preprocess.hpp"

using namespace laycheck;

namespace {

int failed = 0;

void report(int number, const std::string& title, bool ok,
            const std::string& detail = "") {
  std::printf("criterion %d: %-38s %s%s%s\n", number, title.c_str(),
              ok ? "PASS" : "FAIL", detail.empty() ? "" : " -- ",
              detail.c_str());
  if (!ok) ++failed;
}

LabeledLayout lay(const std::string& text) {
  return label_layout(parse_dsl(text));
}

bool verdict_is(const std::string& text, Status expected) {
  return check(lay(text)).status == expected;
}

// 1. Exact reproduction of the published verdicts.
void criterion_1() {
  bool ok = true;
  ok &= verdict_is("f v", Status::NonDeserializable);
  ok &= verdict_is("f v f", Status::NonDeserializable);
  ok &= verdict_is("p(2,1) f v f", Status::Deserializable);
  ok &= verdict_is("p(0,4) v p(3,1) v", Status::NonDeserializable);
  ok &= necessary_condition(lay("p(0,4) v p(3,1) v")).satisfied;
  ok &= verdict_is("f p(2,3) f v v p(3,1)", Status::Deserializable);
  ok &= verdict_is("f p(2,3) f v v p(4,1)", Status::Deserializable);
  ok &= verdict_is("f p(2,4) f v p(5,1) v", Status::NonDeserializable);
  ok &= verdict_is("p(1,4) v p(1,1) v p(3,1)", Status::Deserializable);
  ok &= verdict_is("p(1,1) [ v ]", Status::NonDeserializable);
  ok &= check_flat_unsound(lay("p(1,1) [ v ]")).status ==
        Status::Deserializable;
  for (const CorpusEntry& e : load_corpus(CORPUS_DIR)) {
    LabeledLayout l = lay(e.dsl);
    if (e.expectation.check) ok &= check(l).status == *e.expectation.check;
    if (e.expectation.check_flat_unsound)
      ok &= check_flat_unsound(l).status == *e.expectation.check_flat_unsound;
    if (e.expectation.necessary_condition)
      ok &= necessary_condition(l).satisfied ==
            *e.expectation.necessary_condition;
  }
  report(1, "verdict regression", ok);
}

// 2. Deserializable layouts always satisfy the bounding condition.
void criterion_2() {
  std::mt19937 rng(101);
  auto start = std::chrono::steady_clock::now();
  int counterexamples = 0;
  int tested = 0;
  while (tested < 1000) {
    LabeledLayout l = label_layout(tested % 2 == 0 ? gen::random_flat(rng)
                                                   : gen::random_nested(rng));
    if (!validate(l).valid) continue;
    ++tested;
    if (check(l).status == Status::Deserializable &&
        !necessary_condition(l).satisfied)
      ++counterexamples;
  }
  double secs = std::chrono::duration<double>(
                    std::chrono::steady_clock::now() - start)
                    .count();
  report(2, "bounding condition (1000 layouts)",
         counterexamples == 0 && secs <= 10.0,
         std::to_string(counterexamples) + " counterexamples, " +
             std::to_string(secs).substr(0, 5) + "s");
}

// 3. Metamorphic suite over pointer-bounded repetition fragments.
void criterion_3() {
  std::mt19937 rng(103);
  int accepted = 0, agreements = 0;
  while (accepted < 100) {
    LayoutTree r = gen::random_fragment(rng);
    LabeledLayout lr = label_layout(r);
    if (r.items.empty() || !validate(lr).valid) continue;
    uint64_t m = r.items.size();

    LayoutTree once;
    once.items.push_back(Item::pointer(Label{{1}}, m));
    for (const Item& it : shift(r.items, 1)) once.items.push_back(it);
    LabeledLayout lonce = label_layout(once);
    if (!validate(lonce).valid) continue;
    if (check_flat(lonce).status != Status::Deserializable) continue;
    if (check_flat(lr).status != Status::NonDeserializable) continue;
    ++accepted;

    LayoutTree twice;
    twice.items.push_back(Item::pointer(Label{{1}}, 2 * m));
    for (const Item& it : shift(r.items, 1)) twice.items.push_back(it);
    for (const Item& it : shift(r.items, uint32_t(m) + 1))
      twice.items.push_back(it);
    Status twice_verdict = check_flat(label_layout(twice)).status;
    Status reverse_verdict = check_flat(reverse(lr)).status;
    if (twice_verdict == reverse_verdict) ++agreements;
  }
  report(3, "metamorphic reverse suite", agreements == accepted,
         std::to_string(agreements) + "/" + std::to_string(accepted) +
             " agree");
}

// 4. Fast engine agrees with the naive oracle.
void criterion_4() {
  std::mt19937 rng(107);
  bool ok = true;
  for (int i = 0; i < 500; ++i) {
    KnowledgeBase kb = gen::random_kb(rng);
    InferenceResult fast = infer(kb);
    ok &= std::set<Fact>(fast.closure.begin(), fast.closure.end()) ==
          naive_closure(kb);
  }
  for (const CorpusEntry& e : load_corpus(CORPUS_DIR)) {
    KnowledgeBase kb =
        ground_axioms(duplicate_repetitions(lay(e.dsl)));
    InferenceResult fast = infer(kb);
    ok &= std::set<Fact>(fast.closure.begin(), fast.closure.end()) ==
          naive_closure(kb);
  }
  report(4, "engine differential oracle", ok);
}

// 5. No deserializable layout has a non-deserializable unwinding.
void criterion_5() {
  std::mt19937 rng(109);
  int violations = 0;
  for (int i = 0; i < 200; ++i) {
    LayoutTree t = gen::random_with_repetition(rng);
    LabeledLayout l = label_layout(t);
    if (!validate(l).valid) { --i; continue; }
    if (!cross_check_unwindings(l, 3, 5000).sound()) ++violations;
  }
  report(5, "unwinding soundness (200 layouts)", violations == 0,
         std::to_string(violations) + " violations");
}

// 6. Check time fits a linear model over chain layouts.
void criterion_6() {
  const std::vector<size_t> exps = {10, 12, 14, 16};
  std::vector<LabeledLayout> layouts;
  for (size_t exp : exps) {
    size_t n = size_t(1) << exp;
    LayoutTree t;
    t.items.push_back(Item::pointer(Label{{1}}, 1));
    t.items.push_back(Item::var());
    for (size_t i = 2; i < n; ++i) t.items.push_back(Item::fixed());
    layouts.push_back(label_layout(t));
  }
  // Round-robin repetitions and keep the fastest time per size, so a noisy
  // scheduler slice distorts at most one repetition instead of one size.
  std::vector<double> ts(exps.size(), 1e100);
  for (int run = 0; run < 9; ++run) {
    for (size_t i = 0; i < layouts.size(); ++i) {
      auto start = std::chrono::steady_clock::now();
      Verdict v = check_flat(layouts[i]);
      double secs = std::chrono::duration<double>(
                        std::chrono::steady_clock::now() - start)
                        .count();
      if (v.status != Status::Deserializable) { report(6, "linearity", false,
          "chain verdict wrong"); return; }
      ts[i] = std::min(ts[i], secs);
    }
  }
  std::vector<double> ns;
  for (size_t exp : exps) ns.push_back(double(size_t(1) << exp));
  // Fit t = a*n + b minimizing the relative residuals (t spans two orders
  // of magnitude, so an absolute-error fit would ignore the small sizes).
  double sxx = 0, sxy = 0, syy = 0, sx = 0, sy = 0;
  for (size_t i = 0; i < ns.size(); ++i) {
    double x = ns[i] / ts[i], y = 1.0 / ts[i];
    sxx += x * x; sxy += x * y; syy += y * y; sx += x; sy += y;
  }
  double det = sxx * syy - sxy * sxy;
  double a = (sx * syy - sy * sxy) / det;
  double b = (sxx * sy - sxy * sx) / det;
  double worst = 0;
  for (size_t i = 0; i < ns.size(); ++i) {
    double pred = a * ns[i] + b;
    worst = std::max(worst, std::fabs(ts[i] - pred) / ts[i]);
  }
  char detail[128];
  std::snprintf(detail, sizeof detail,
                "max relative residual %.1f%% (a=%.1fns/item, b=%.2fms)",
                worst * 100, a * 1e9, b * 1e3);
  report(6, "linearity over chain layouts", worst < 0.20, detail);
}

// 7. Pointer shrinking is exact and verdict-preserving with pruning.
void criterion_7() {
  bool ok = print_dsl(shrink_pointers(lay("p(0,5) v f v f")).tree()) ==
            "p(1,3) v f v f";
  std::mt19937 rng(113);
  int tested = 0;
  while (tested < 300) {
    LabeledLayout l = label_layout(gen::random_flat(rng));
    if (!validate(l).valid) continue;
    ++tested;
    Status base = check_flat(l).status;
    ok &= check_flat(shrink_pointers(l)).status == base;
    ok &= check_flat(prune_pointers(l)).status == base;
  }
  report(7, "preprocessing passes", ok);
}

// 8. parse after print is the identity.
void criterion_8() {
  std::mt19937 rng(127);
  bool ok = true;
  for (int i = 0; i < 1000; ++i) {
    LayoutTree t = gen::random_tree(rng);
    ok &= parse_dsl(print_dsl(t)) == t;
  }
  report(8, "dsl round-trip (1000 trees)", ok);
}

}  // namespace

int main() {
  criterion_1();
  criterion_2();
  criterion_3();
  criterion_4();
  criterion_5();
  criterion_6();
  criterion_7();
  criterion_8();
  return failed == 0 ? 0 : 1;
}
