#include "stringtop/tqft/decomposition.hpp"

#include <algorithm>
#include <random>

#include "stringtop/error.hpp"
#include "stringtop/linear/tensor_map.hpp"

namespace stringtop::tqft {

using linear::Tensor;

namespace {

struct LiveWire {
  Port source;
  std::size_t component;
};

class Builder {
 public:
  Builder(const TopologicalType& t, std::uint64_t seed, Sector sector)
      : type_(t),
        sector_(sector),
        rng_(seed),
        dag_("random-" + std::to_string(t.genus) + "-" + std::to_string(t.inputs) + "-" +
                 std::to_string(t.outputs) + "-" + std::to_string(seed),
             t.inputs, t.outputs) {
    for (std::size_t k = 0; k < t.inputs; ++k) live_.push_back({BordismDag::input(k), k});
    pants_left_ = static_cast<std::size_t>(t.genus) + t.inputs - 1;
    copants_left_ = static_cast<std::size_t>(t.genus) + t.outputs - 1;
    extras_left_ = uniform(0, 3);
  }

  BordismDag build() {
    while (pants_left_ + copants_left_ + extras_left_ > 0) step();
    finish();
    return std::move(dag_);
  }

 private:
  std::size_t uniform(std::size_t lo, std::size_t hi) {
    return std::uniform_int_distribution<std::size_t>(lo, hi)(rng_);
  }

  std::size_t components() const {
    std::vector<std::size_t> seen;
    for (const auto& w : live_) {
      if (std::find(seen.begin(), seen.end(), w.component) == seen.end()) seen.push_back(w.component);
    }
    return seen.size();
  }

  // Wire pairs that a pants may join without breaking the remaining budget.
  std::vector<std::pair<std::size_t, std::size_t>> pants_choices() const {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    if (pants_left_ == 0) return out;
    const std::size_t comps = components();
    const bool may_close_handle = sector_ == Sector::closed && pants_left_ > comps - 1;
    for (std::size_t i = 0; i < live_.size(); ++i) {
      for (std::size_t j = 0; j < live_.size(); ++j) {
        if (i == j) continue;
        if (sector_ == Sector::open && j != i + 1) continue;
        const bool merges = live_[i].component != live_[j].component;
        if (merges || may_close_handle) out.emplace_back(i, j);
      }
    }
    return out;
  }

  std::string next_id(char prefix) { return std::string(1, prefix) + std::to_string(++counter_); }

  void relabel(std::size_t from, std::size_t to) {
    for (auto& w : live_) {
      if (w.component == from) w.component = to;
    }
  }

  void step() {
    const auto joins = pants_choices();
    // Copants keep the live count positive; pants need a legal pair.
    std::vector<int> moves;
    if (!joins.empty()) moves.push_back(0);
    if (copants_left_ > 0) moves.push_back(1);
    if (extras_left_ > 0) moves.push_back(2);
    if (moves.empty()) throw Error("internal: decomposition generator stuck at " + type_name(type_));
    switch (moves[uniform(0, moves.size() - 1)]) {
      case 0: {
        const auto [i, j] = joins[uniform(0, joins.size() - 1)];
        const std::size_t n = dag_.add_node(next_id('p'), GeneratorKind::pants);
        dag_.add_wire(live_[i].source, BordismDag::node_in(n, 0));
        dag_.add_wire(live_[j].source, BordismDag::node_in(n, 1));
        const std::size_t comp = live_[i].component;
        relabel(live_[j].component, comp);
        const std::size_t lo = std::min(i, j);
        live_[lo] = {BordismDag::node_out(n, 0), comp};
        live_.erase(live_.begin() + static_cast<std::ptrdiff_t>(std::max(i, j)));
        --pants_left_;
        break;
      }
      case 1: {
        const std::size_t i = uniform(0, live_.size() - 1);
        const std::size_t n = dag_.add_node(next_id('c'), GeneratorKind::copants);
        dag_.add_wire(live_[i].source, BordismDag::node_in(n, 0));
        const std::size_t comp = live_[i].component;
        live_[i] = {BordismDag::node_out(n, 0), comp};
        live_.insert(live_.begin() + static_cast<std::ptrdiff_t>(i + 1), {BordismDag::node_out(n, 1), comp});
        --copants_left_;
        break;
      }
      default: {
        --extras_left_;
        if (sector_ == Sector::closed && live_.size() >= 2 && uniform(0, 1) == 0) {
          std::size_t i = uniform(0, live_.size() - 1);
          std::size_t j = uniform(0, live_.size() - 2);
          if (j >= i) ++j;
          const std::size_t n = dag_.add_node(next_id('t'), GeneratorKind::twist);
          dag_.add_wire(live_[i].source, BordismDag::node_in(n, 0));
          dag_.add_wire(live_[j].source, BordismDag::node_in(n, 1));
          // in.0 continues as out.1 and in.1 as out.0.
          live_[i].source = BordismDag::node_out(n, 1);
          live_[j].source = BordismDag::node_out(n, 0);
        } else {
          const std::size_t i = uniform(0, live_.size() - 1);
          const std::size_t n = dag_.add_node(next_id('i'), GeneratorKind::cylinder);
          dag_.add_wire(live_[i].source, BordismDag::node_in(n, 0));
          live_[i].source = BordismDag::node_out(n, 0);
        }
        break;
      }
    }
  }

  void finish() {
    std::vector<std::size_t> order(live_.size());
    for (std::size_t k = 0; k < order.size(); ++k) order[k] = k;
    if (sector_ == Sector::closed) std::shuffle(order.begin(), order.end(), rng_);
    if (order.size() != type_.outputs) throw Error("internal: decomposition ends with the wrong output count");
    for (std::size_t k = 0; k < order.size(); ++k) dag_.add_wire(live_[order[k]].source, BordismDag::output(k));
  }

  TopologicalType type_;
  Sector sector_;
  std::mt19937_64 rng_;
  BordismDag dag_;
  std::vector<LiveWire> live_;
  std::size_t pants_left_ = 0;
  std::size_t copants_left_ = 0;
  std::size_t extras_left_ = 0;
  std::size_t counter_ = 0;
};

}  // namespace

BordismDag random_decomposition(const TopologicalType& t, std::uint64_t seed, Sector sector) {
  if (t.inputs == 0 || t.outputs == 0 || t.genus < 0) throw Error("invalid topological type " + type_name(t));
  if (sector == Sector::open && t.genus != 0) throw Error("the open sector only has genus 0 decompositions");
  BordismDag b = Builder(t, seed, sector).build();
  b.validate();
  if (type_of(b) != t) throw Error("internal: generated decomposition has the wrong type");
  return b;
}

std::vector<TopologicalType> types_up_to(int genus_max, std::size_t ports_max) {
  std::vector<TopologicalType> out;
  for (int g = 0; g <= genus_max; ++g) {
    for (std::size_t m = 1; m <= ports_max; ++m) {
      for (std::size_t n = 1; n <= ports_max; ++n) out.push_back({g, m, n});
    }
  }
  return out;
}

std::vector<FormalSum> basis_inputs(const Dialgebra& d, std::size_t arity) {
  const auto dim = static_cast<std::uint32_t>(d.space().dimension());
  std::vector<FormalSum> out;
  if (dim == 0) return out;
  Tensor t(arity, 0);
  while (true) {
    out.push_back(FormalSum::basis_element(d.basis, t));
    std::size_t k = arity;
    while (k > 0 && ++t[k - 1] == dim) t[--k] = 0;
    if (k == 0) break;
  }
  return out;
}

bool InvarianceReport::gate_passed() const { return tqft::gate_passed(gate); }

bool InvarianceReport::invariant() const {
  return std::all_of(types.begin(), types.end(), [](const TypeOutcome& t) { return t.mismatches == 0; });
}

std::optional<Discrepancy> InvarianceReport::first_discrepancy() const {
  for (const auto& t : types) {
    if (t.first) return t.first;
  }
  return std::nullopt;
}

InvarianceReport run_invariance(const Dialgebra& d, const InvarianceConfig& config, Execution mode) {
  InvarianceReport report;
  report.gate = gate_frobenius(d, config.sector);
  const int genus_max = config.sector == Sector::open ? 0 : config.genus_max;
  const auto types = types_up_to(genus_max, config.ports_max);

  struct Normal {
    std::vector<FormalSum> inputs;
    std::vector<FormalSum> values;
  };
  std::vector<Normal> normals(types.size());
  for_each_case(mode, types.size(), [&](std::size_t i) {
    const BordismDag nf = normal_form(types[i]);
    normals[i].inputs = basis_inputs(d, types[i].inputs);
    for (const auto& v : normals[i].inputs) normals[i].values.push_back(evaluate(d, nf, v));
  });

  const std::size_t total = types.size() * config.samples;
  std::vector<std::optional<Discrepancy>> found(total);
  for_each_case(mode, total, [&](std::size_t c) {
    const std::size_t i = c / config.samples;
    const std::uint64_t seed = case_seed(config.seed, c);
    const BordismDag b = random_decomposition(types[i], seed, config.sector);
    const Normal& nf = normals[i];
    for (std::size_t k = 0; k < nf.inputs.size(); ++k) {
      FormalSum value = evaluate(d, b, nf.inputs[k]);
      if (value == nf.values[k]) continue;
      std::vector<std::string> names;
      for (auto idx : nf.inputs[k].terms().begin()->first) names.push_back(d.space().symbol(idx).name);
      found[c] = Discrepancy{types[i], seed, std::move(names), nf.values[k], std::move(value)};
      return;
    }
  });

  for (std::size_t i = 0; i < types.size(); ++i) {
    TypeOutcome t{types[i], config.samples, 0, std::nullopt};
    for (std::size_t k = 0; k < config.samples; ++k) {
      auto& f = found[i * config.samples + k];
      if (!f) continue;
      ++t.mismatches;
      if (!t.first) t.first = std::move(f);
    }
    report.types.push_back(std::move(t));
  }
  return report;
}

PropertyResult frobenius_move_property(const Dialgebra& d) {
  const auto pairs = basis_inputs(d, 2);
  return run_property("frobenius move", pairs.size(), Execution::serial, [&](std::size_t i) -> std::optional<std::string> {
    const FormalSum& v = pairs[i];
    const FormalSum middle = linear::apply_tensor_map(d.coproduct, linear::apply_tensor_map(d.product, v));
    const FormalSum left = linear::apply_at(d.product, linear::apply_at(d.coproduct, v, 0), 1);
    const FormalSum right = linear::apply_at(d.product, linear::apply_at(d.coproduct, v, 1), 0);
    if (left == middle && right == middle) return std::nullopt;
    return v.terms().begin()->first.size() == 2 ? v.tensor_name(v.terms().begin()->first) : std::string("?");
  });
}

std::string format_discrepancy(const Discrepancy& x) {
  std::string input;
  for (const auto& s : x.input) input += (input.empty() ? "" : ",") + s;
  std::string normal = x.normal_value.to_string();
  std::string decomposed = x.decomposed_value.to_string();
  auto oneline = [](std::string s) {
    if (!s.empty() && s.back() == '\n') s.pop_back();
    std::replace(s.begin(), s.end(), '\n', ';');
    return s;
  };
  return type_name(x.type) + " seed=" + std::to_string(x.decomposition_seed) + " input=" + input +
         " normal=[" + oneline(normal) + "] decomposed=[" + oneline(decomposed) + "]";
}

}  // namespace stringtop::tqft
