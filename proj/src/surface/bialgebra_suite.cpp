#include "stringtop/surface/bialgebra_suite.hpp"

#include <algorithm>
#include <functional>
#include <set>

namespace stringtop::surface {

namespace {

ClosedTensor swap_factors(const ClosedTensor& t) {
  ClosedTensor out;
  for (const auto& [xy, c] : t) out.add({xy.second, xy.first}, c);
  return out;
}

std::string describe(std::initializer_list<const CyclicWord*> words) {
  std::string out;
  for (const auto* w : words) {
    if (!out.empty()) out += ", ";
    out += w->to_string();
  }
  return out;
}

}  // namespace

std::vector<CyclicWord> enumerate_cyclic_words(const SurfaceSymbol& symbol, std::size_t max_length) {
  std::set<CyclicWord> found;
  const auto& letters = symbol.order();
  std::vector<Letter> word;
  std::function<void()> extend = [&]() {
    if (!word.empty()) {
      if (auto c = CyclicWord::reduce(word); c && c->size() == word.size()) found.insert(*c);
    }
    if (word.size() == max_length) return;
    for (Letter x : letters) {
      if (!word.empty() && word.back() == inverse(x)) continue;
      word.push_back(x);
      extend();
      word.pop_back();
    }
  };
  extend();
  return {found.begin(), found.end()};
}

CyclicWord random_cyclic_word(const SurfaceSymbol& symbol, std::size_t max_length, std::mt19937_64& rng) {
  const auto& letters = symbol.order();
  std::uniform_int_distribution<std::size_t> length(1, max_length);
  std::uniform_int_distribution<std::size_t> pick(0, letters.size() - 1);
  const std::size_t n = length(rng);
  while (true) {
    std::vector<Letter> w;
    while (w.size() < n) {
      const Letter x = letters[pick(rng)];
      if (!w.empty() && w.back() == inverse(x)) continue;
      w.push_back(x);
    }
    if (n > 1 && w.front() == inverse(w.back())) continue;
    return *CyclicWord::reduce(w);
  }
}

ClosedStateSum antisymmetry_defect(const SurfaceSymbol& s, const CyclicWord& a, const CyclicWord& b) {
  return bracket(s, a, b) + bracket(s, b, a);
}

ClosedStateSum jacobi_defect(const SurfaceSymbol& s, const CyclicWord& a, const CyclicWord& b,
                             const CyclicWord& c) {
  const ClosedStateSum wa = ClosedStateSum::single(a);
  const ClosedStateSum wb = ClosedStateSum::single(b);
  const ClosedStateSum wc = ClosedStateSum::single(c);
  ClosedStateSum out = bracket(s, wa, bracket(s, b, c));
  out += bracket(s, wb, bracket(s, c, a));
  out += bracket(s, wc, bracket(s, a, b));
  return out;
}

ClosedTensor coantisymmetry_defect(const SurfaceSymbol& s, const CyclicWord& a) {
  const ClosedTensor d = cobracket(s, a);
  return d + swap_factors(d);
}

ClosedTensor3 cojacobi_defect(const SurfaceSymbol& s, const CyclicWord& a) {
  ClosedTensor3 out;
  for (const auto& [xy, c] : cobracket(s, a)) {
    for (const auto& [uv, d] : cobracket(s, xy.first)) {
      const auto& [u, v] = uv;
      const auto& w = xy.second;
      const Rational k = c * d;
      out.add({u, v, w}, k);
      out.add({v, w, u}, k);
      out.add({w, u, v}, k);
    }
  }
  return out;
}

ClosedTensor drinfeld_defect(const SurfaceSymbol& s, const CyclicWord& a, const CyclicWord& b) {
  ClosedTensor out = cobracket(s, bracket(s, a, b));
  out -= act(s, a, cobracket(s, b));
  out += act(s, b, cobracket(s, a));
  return out;
}

bool BialgebraSuiteReport::passed() const {
  return all_passed(properties);
}

BialgebraSuiteReport run_bialgebra_suite(const SurfaceSymbol& symbol, const BialgebraSuiteConfig& config,
                                         Execution mode) {
  const auto words = enumerate_cyclic_words(symbol, config.exhaustive_max_length);
  const std::size_t n = words.size();

  // Jacobi's defect is cyclically symmetric and, given antisymmetry, changes
  // sign under a transposition, so multisets a <= b <= c cover every triple.
  std::vector<std::array<std::size_t, 3>> triples;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      for (std::size_t k = j; k < n; ++k) triples.push_back({i, j, k});
    }
  }

  struct Tuple {
    CyclicWord a, b, c;
  };
  std::vector<Tuple> random;
  random.reserve(config.samples);
  for (std::size_t i = 0; i < config.samples; ++i) {
    std::mt19937_64 rng(case_seed(config.seed, i));
    auto a = random_cyclic_word(symbol, config.random_max_length, rng);
    auto b = random_cyclic_word(symbol, config.random_max_length, rng);
    auto c = random_cyclic_word(symbol, config.random_max_length, rng);
    random.push_back({std::move(a), std::move(b), std::move(c)});
  }

  auto fail_if = [](bool bad, std::string what) -> std::optional<std::string> {
    if (bad) return what;
    return std::nullopt;
  };

  BialgebraSuiteReport report;
  auto& props = report.properties;

  props.push_back(run_property("antisymmetry (exhaustive)", n * n, mode, [&](std::size_t i) {
    const auto& a = words[i / n];
    const auto& b = words[i % n];
    return fail_if(!antisymmetry_defect(symbol, a, b).empty(), describe({&a, &b}));
  }));
  props.push_back(run_property("antisymmetry (random)", random.size(), mode, [&](std::size_t i) {
    const auto& t = random[i];
    return fail_if(!antisymmetry_defect(symbol, t.a, t.b).empty(), describe({&t.a, &t.b}));
  }));
  props.push_back(run_property("jacobi (exhaustive)", triples.size(), mode, [&](std::size_t i) {
    const auto& [x, y, z] = triples[i];
    return fail_if(!jacobi_defect(symbol, words[x], words[y], words[z]).empty(),
                   describe({&words[x], &words[y], &words[z]}));
  }));
  props.push_back(run_property("jacobi (random)", random.size(), mode, [&](std::size_t i) {
    const auto& t = random[i];
    return fail_if(!jacobi_defect(symbol, t.a, t.b, t.c).empty(), describe({&t.a, &t.b, &t.c}));
  }));
  props.push_back(run_property("co-antisymmetry (exhaustive)", n, mode, [&](std::size_t i) {
    return fail_if(!coantisymmetry_defect(symbol, words[i]).empty(), describe({&words[i]}));
  }));
  props.push_back(run_property("co-antisymmetry (random)", random.size(), mode, [&](std::size_t i) {
    return fail_if(!coantisymmetry_defect(symbol, random[i].a).empty(), describe({&random[i].a}));
  }));
  props.push_back(run_property("cojacobi (exhaustive)", n, mode, [&](std::size_t i) {
    return fail_if(!cojacobi_defect(symbol, words[i]).empty(), describe({&words[i]}));
  }));
  props.push_back(run_property("cojacobi (random)", random.size(), mode, [&](std::size_t i) {
    return fail_if(!cojacobi_defect(symbol, random[i].a).empty(), describe({&random[i].a}));
  }));
  props.push_back(run_property("drinfeld (exhaustive)", n * n, mode, [&](std::size_t i) {
    const auto& a = words[i / n];
    const auto& b = words[i % n];
    return fail_if(!drinfeld_defect(symbol, a, b).empty(), describe({&a, &b}));
  }));
  props.push_back(run_property("drinfeld (random)", random.size(), mode, [&](std::size_t i) {
    const auto& t = random[i];
    return fail_if(!drinfeld_defect(symbol, t.a, t.b).empty(), describe({&t.a, &t.b}));
  }));
  props.push_back(run_property("cobracket vanishing", n, mode, [&](std::size_t i) {
    const auto& w = words[i];
    const bool expect_zero = w.size() == 1 || intersection_count(symbol, w, w) == 0;
    return fail_if(expect_zero && !cobracket(symbol, w).empty(), describe({&w}));
  }));
  props.push_back(run_property("mark/erase", n, mode, [&](std::size_t i) {
    const auto& w = words[i];
    ClosedStateSum erased =
        linear::extend_linearly(mark_all(w), [](const LinearWord& m) { return erase_mark(m); });
    const ClosedStateSum expected =
        ClosedStateSum::single(w, Rational(static_cast<std::int64_t>(w.size())));
    return fail_if(!(erased == expected), describe({&w}));
  }));
  return report;
}

}  // namespace stringtop::surface
