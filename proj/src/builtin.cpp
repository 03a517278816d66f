#include "stringtop/builtin.hpp"

#include <string>

#include "stringtop/error.hpp"

namespace stringtop::builtin {

namespace {

constexpr Source kDialgebras[] = {
    {"dual-numbers-mutated", R"txt(# Q[x]/x^2 with the coproduct of x replaced by e (x) e.
dialgebra dual-numbers-mutated
basis e deg 0
basis x deg 0
unit e
prod e e -> e : 1/1
prod e x -> x : 1/1
prod x e -> x : 1/1
coprod e -> e x : 1/1
coprod e -> x e : 1/1
coprod x -> e e : 1/1
)txt"},
    {"dual-numbers", R"txt(# Q[x]/x^2 with the coproduct dual to the pairing <e,x> = 1.
dialgebra dual-numbers
basis e deg 0
basis x deg 0
unit e
prod e e -> e : 1/1
prod e x -> x : 1/1
prod x e -> x : 1/1
coprod e -> e x : 1/1
coprod e -> x e : 1/1
coprod x -> x x : 1/1
)txt"},
    {"idempotents", R"txt(# Q x Q: orthogonal idempotents with the coproduct p_i -> p_i (x) p_i.
dialgebra idempotents
basis p1 deg 0
basis p2 deg 0
prod p1 p1 -> p1 : 1/1
prod p2 p2 -> p2 : 1/1
coprod p1 -> p1 p1 : 1/1
coprod p2 -> p2 p2 : 1/1
)txt"},
    {"lie-2d", R"txt(# Two-dimensional Lie bialgebra: [h,e] = e, cobracket(e) = h (x) e - e (x) h.
dialgebra lie-2d
basis h deg 0
basis e deg 0
prod h e -> e : 1/1
prod e h -> e : -1/1
coprod e -> h e : 1/1
coprod e -> e h : -1/1
)txt"},
    {"lie-zero", R"txt(# One-dimensional Lie dialgebra: bracket and cobracket both vanish.
dialgebra lie-zero
basis h deg 0
)txt"},
    {"matrix2", R"txt(# 2x2 matrices with the coproduct e_ab -> sum_j e_aj (x) e_jb.
dialgebra matrix2
basis e11 deg 0
basis e12 deg 0
basis e21 deg 0
basis e22 deg 0
prod e11 e11 -> e11 : 1/1
prod e11 e12 -> e12 : 1/1
prod e12 e21 -> e11 : 1/1
prod e12 e22 -> e12 : 1/1
prod e21 e11 -> e21 : 1/1
prod e21 e12 -> e22 : 1/1
prod e22 e21 -> e21 : 1/1
prod e22 e22 -> e22 : 1/1
coprod e11 -> e11 e11 : 1/1
coprod e11 -> e12 e21 : 1/1
coprod e12 -> e11 e12 : 1/1
coprod e12 -> e12 e22 : 1/1
coprod e21 -> e21 e11 : 1/1
coprod e21 -> e22 e21 : 1/1
coprod e22 -> e21 e12 : 1/1
coprod e22 -> e22 e22 : 1/1
)txt"},
    {"zero", R"txt(dialgebra zero
basis z deg 0
)txt"},
};

constexpr Source kBordisms[] = {
    {"handle", R"txt(# Genus one, one input, one output: coproduct followed by product.
bordism handle
in 1
out 1
node c copants
node p pants
wire in.0 c.in.0
wire c.out.0 p.in.0
wire c.out.1 p.in.1
wire p.out.0 out.0
)txt"},
    {"pants", R"txt(bordism pants
in 2
out 1
node p pants
wire in.0 p.in.0
wire in.1 p.in.1
wire p.out.0 out.0
)txt"},
    {"twisted", R"txt(bordism twisted
in 2
out 1
node t twist
node p pants
wire in.0 t.in.0
wire in.1 t.in.1
wire t.out.0 p.in.0
wire t.out.1 p.in.1
wire p.out.0 out.0
)txt"},
    {"zigzag", R"txt(# (product (x) id) after (id (x) coproduct): a Frobenius zig-zag of type (0,2,2).
bordism zigzag
in 2
out 2
node c copants
node p pants
wire in.1 c.in.0
wire in.0 p.in.0
wire c.out.0 p.in.1
wire p.out.0 out.0
wire c.out.1 out.1
)txt"},
};

constexpr Source kGraphs[] = {
    {"rose", R"txt(graph rose
vertex v
edge x v v
edge y v v
label V v
)txt"},
    {"square", R"txt(# Directed square 1 -> 2 -> 3 -> 4 -> 1 with a chord and a loop.
graph square
vertex 1
vertex 2
vertex 3
vertex 4
edge a 1 2
edge b 2 3
edge c 3 4
edge d 4 1
edge s 1 3
edge l 2 2
label A 1 4
label B 2
label C 3
)txt"},
};

}  // namespace

std::span<const Source> dialgebras() { return kDialgebras; }
std::span<const Source> bordisms() { return kBordisms; }
std::span<const Source> graphs() { return kGraphs; }

std::string_view dialgebra_text(std::string_view name) {
  for (const auto& s : kDialgebras) {
    if (s.name == name) return s.text;
  }
  throw Error("unknown built-in dialgebra '" + std::string(name) + "'");
}

}  // namespace stringtop::builtin
