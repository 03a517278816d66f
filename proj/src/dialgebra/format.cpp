#include "stringtop/dialgebra/format.hpp"

#include <set>
#include <sstream>

#include "../text_util.hpp"

namespace stringtop::dialgebra {

namespace {

linear::Rational parse_coeff(const text::Line& line, const std::string& tok) {
  try {
    return linear::Rational::parse(tok);
  } catch (const Error& e) {
    throw ParseError(line.number, e.what());
  }
}

std::uint32_t lookup(const GradedBasis& basis, const text::Line& line, const std::string& name) {
  if (auto i = basis.find(name)) return *i;
  throw ParseError(line.number, "unknown basis symbol '" + name + "'");
}

}  // namespace

Dialgebra parse_dialgebra(std::string_view source) {
  const auto lines = text::tokenize(source);
  if (lines.empty()) throw ParseError(1, "empty dialgebra file");
  const auto& head = lines.front();
  if (head.tokens[0] != "dialgebra") throw ParseError(head.number, "expected 'dialgebra <name>'");
  text::expect_count(head, 2, "dialgebra <name>");

  // Basis lines must come before anything that references symbols.
  std::vector<linear::BasisSymbol> symbols;
  std::size_t k = 1;
  for (; k < lines.size() && lines[k].tokens[0] == "basis"; ++k) {
    const auto& line = lines[k];
    if (line.tokens.size() != 4 || line.tokens[2] != "deg") {
      throw ParseError(line.number, "expected 'basis <symbol> deg <int>'");
    }
    for (const auto& s : symbols) {
      if (s.name == line.tokens[1]) throw ParseError(line.number, "duplicate basis symbol '" + s.name + "'");
    }
    symbols.push_back({line.tokens[1], text::parse_int(line, line.tokens[3])});
  }
  Dialgebra d(head.tokens[1], GradedBasis::make(std::move(symbols)));

  std::set<std::pair<std::string, Tensor>> seen;
  bool unit_seen = false;
  for (; k < lines.size(); ++k) {
    const auto& line = lines[k];
    const auto& t = line.tokens;
    const std::string& kw = t[0];
    if (kw == "basis") {
      throw ParseError(line.number, "basis lines must precede all other declarations");
    } else if (kw == "unit") {
      text::expect_count(line, 2, "unit <symbol>");
      if (unit_seen) throw ParseError(line.number, "duplicate unit declaration");
      unit_seen = true;
      d.unit = lookup(*d.basis, line, t[1]);
    } else if (kw == "shift") {
      text::expect_count(line, 3, "shift prod|coprod <int>");
      const int value = text::parse_int(line, t[2]);
      if (t[1] == "prod") {
        d.product.set_shift(value);
      } else if (t[1] == "coprod") {
        d.coproduct.set_shift(value);
      } else {
        throw ParseError(line.number, "expected 'shift prod|coprod <int>'");
      }
    } else if (kw == "prod") {
      if (t.size() != 7 || t[3] != "->" || t[5] != ":") {
        throw ParseError(line.number, "expected 'prod <s1> <s2> -> <s3> : <p>/<q>'");
      }
      const Tensor in = {lookup(*d.basis, line, t[1]), lookup(*d.basis, line, t[2])};
      const Tensor out = {lookup(*d.basis, line, t[4])};
      Tensor key = in;
      key.insert(key.end(), out.begin(), out.end());
      if (!seen.insert({"prod", key}).second) throw ParseError(line.number, "duplicate prod entry");
      d.product.add(in, out, parse_coeff(line, t[6]));
    } else if (kw == "coprod") {
      if (t.size() != 7 || t[2] != "->" || t[5] != ":") {
        throw ParseError(line.number, "expected 'coprod <s1> -> <s2> <s3> : <p>/<q>'");
      }
      const Tensor in = {lookup(*d.basis, line, t[1])};
      const Tensor out = {lookup(*d.basis, line, t[3]), lookup(*d.basis, line, t[4])};
      Tensor key = in;
      key.insert(key.end(), out.begin(), out.end());
      if (!seen.insert({"coprod", key}).second) throw ParseError(line.number, "duplicate coprod entry");
      d.coproduct.add(in, out, parse_coeff(line, t[6]));
    } else if (kw == "dialgebra") {
      throw ParseError(line.number, "only one dialgebra per file");
    } else {
      throw ParseError(line.number, "unknown keyword '" + kw + "'");
    }
  }
  try {
    d.validate();
  } catch (const ParseError&) {
    throw;
  } catch (const Error& e) {
    throw ParseError(lines.back().number, e.what());
  }
  return d;
}

Dialgebra load_dialgebra(const std::string& path) { return parse_dialgebra(text::read_file(path)); }

std::string serialize_dialgebra(const Dialgebra& d) {
  const auto& basis = *d.basis;
  std::ostringstream os;
  os << "dialgebra " << d.name << '\n';
  for (const auto& s : basis.symbols()) os << "basis " << s.name << " deg " << s.degree << '\n';
  if (d.unit) os << "unit " << basis.symbol(*d.unit).name << '\n';
  if (d.product.shift() != 0) os << "shift prod " << d.product.shift() << '\n';
  if (d.coproduct.shift() != 0) os << "shift coprod " << d.coproduct.shift() << '\n';
  for (const auto& [in, image] : d.product.table()) {
    for (const auto& [out, c] : image) {
      os << "prod " << basis.symbol(in[0]).name << ' ' << basis.symbol(in[1]).name << " -> "
         << basis.symbol(out[0]).name << " : " << c << '\n';
    }
  }
  for (const auto& [in, image] : d.coproduct.table()) {
    for (const auto& [out, c] : image) {
      os << "coprod " << basis.symbol(in[0]).name << " -> " << basis.symbol(out[0]).name << ' '
         << basis.symbol(out[1]).name << " : " << c << '\n';
    }
  }
  return os.str();
}

}  // namespace stringtop::dialgebra
