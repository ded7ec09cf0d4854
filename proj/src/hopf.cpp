#include "kpg/hopf.hpp"

#include <algorithm>

#include "kpg/error.hpp"

namespace kpg {

namespace {

void render_coefficient(std::string& out, const Rational& c, bool first) {
  const bool negative = c < 0;
  if (first) {
    if (negative) out += '-';
  } else {
    out += negative ? " - " : " + ";
  }
  out += to_string(negative ? Rational(-c) : c);
  out += ' ';
}

}  // namespace

// ---------------------------------------------------------------------------
// GraphSum / TensorSum

GraphSum GraphSum::of(const Graph& g, const Rational& c) {
  GraphSum s;
  s.add(g, c);
  return s;
}

void GraphSum::add(const Graph& g, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(canonical_form(g), c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Rational GraphSum::coefficient(const Graph& g) const {
  auto it = terms_.find(canonical_form(g));
  return it == terms_.end() ? Rational(0) : it->second;
}

GraphSum& GraphSum::operator+=(const GraphSum& other) {
  for (const auto& [g, c] : other.terms_) add(g, c);
  return *this;
}

GraphSum& GraphSum::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [g, v] : terms_) v *= c;
  return *this;
}

void TensorSum::add(const Graph& left, const Graph& right, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(Key{canonical_form(left), canonical_form(right)}, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Rational TensorSum::coefficient(const Graph& left, const Graph& right) const {
  auto it = terms_.find(Key{canonical_form(left), canonical_form(right)});
  return it == terms_.end() ? Rational(0) : it->second;
}

TensorSum TensorSum::flipped() const {
  TensorSum t;
  for (const auto& [k, c] : terms_) t.terms_.emplace(Key{k.second, k.first}, c);
  return t;
}

TensorSum& TensorSum::operator+=(const TensorSum& other) {
  for (const auto& [k, c] : other.terms_) add(k.first, k.second, c);
  return *this;
}

GraphSum operator*(const GraphSum& a, const GraphSum& b) {
  GraphSum out;
  for (const auto& [ga, ca] : a.terms()) {
    for (const auto& [gb, cb] : b.terms()) {
      if (ga.vertex_count() + gb.vertex_count() > 8) {
        throw SizeError("graph products are limited to 8 vertices");
      }
      out.add(disjoint_union(ga, gb), ca * cb);
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Coproduct

TensorSum coproduct(const Graph& g) {
  const int n = g.vertex_count();
  if (n > 8) throw SizeError("coproduct supports at most 8 vertices");
  TensorSum t;
  const VertexSet all = g.all_vertices();
  for (unsigned s = 0; s <= all; ++s) {
    const auto left = static_cast<VertexSet>(s);
    t.add(g.induced(left), g.induced(static_cast<VertexSet>(all & ~left)), 1);
  }
  return t;
}

TensorSum coproduct(const GraphSum& s) {
  TensorSum t;
  for (const auto& [g, c] : s.terms()) {
    const TensorSum part = coproduct(g);
    for (const auto& [k, v] : part.terms()) t.add(k.first, k.second, c * v);
  }
  return t;
}

// ---------------------------------------------------------------------------
// Projection and reconstruction

GraphSum primitive_projection(const Graph& g) {
  const int n = g.vertex_count();
  if (n > 7) throw SizeError("primitive_projection supports at most 7 vertices");
  GraphSum out;
  for_each_set_partition(n, [&](const SetPartition& p) {
    const auto k = static_cast<unsigned>(p.size());
    Rational coeff(factorial(k - 1));
    if (k % 2 == 0) coeff = -coeff;
    out.add(g.restricted_to_blocks(p.blocks), coeff);
  });
  return out;
}

GraphSum primitive_projection(const GraphSum& s) {
  GraphSum out;
  for (const auto& [g, c] : s.terms()) {
    GraphSum p = primitive_projection(g);
    p *= c;
    out += p;
  }
  return out;
}

PrimitiveExpansion expand_in_primitives(const Graph& g) {
  const int n = g.vertex_count();
  if (n > 7) throw SizeError("expand_in_primitives supports at most 7 vertices");
  PrimitiveExpansion e;
  for_each_set_partition(n, [&](const SetPartition& p) {
    std::vector<Graph> blocks;
    for (VertexSet b : p.blocks) blocks.push_back(canonical_form(g.induced(b)));
    std::sort(blocks.begin(), blocks.end());
    e.terms[blocks] += 1;
  });
  return e;
}

GraphSum flatten(const PrimitiveExpansion& e) {
  GraphSum out;
  for (const auto& [blocks, count] : e.terms) {
    GraphSum product = GraphSum::of(Graph{});
    for (const Graph& b : blocks) product = product * primitive_projection(b);
    product *= Rational(BigInt(static_cast<unsigned long>(count)));
    out += product;
  }
  return out;
}

// ---------------------------------------------------------------------------
// Rendering

std::string to_string(const GraphSum& s) {
  if (s.is_zero()) return "0";
  std::vector<std::pair<std::string, Rational>> rows;
  for (const auto& [g, c] : s.terms()) rows.emplace_back(emit_graph6(g), c);
  std::sort(rows.begin(), rows.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  std::string out;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    render_coefficient(out, rows[i].second, i == 0);
    out += rows[i].first;
  }
  return out;
}

std::string to_string(const TensorSum& s) {
  if (s.terms().empty()) return "0";
  std::vector<std::pair<std::pair<std::string, std::string>, Rational>> rows;
  for (const auto& [k, c] : s.terms()) {
    rows.push_back({{emit_graph6(k.first), emit_graph6(k.second)}, c});
  }
  std::sort(rows.begin(), rows.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  std::string out;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    render_coefficient(out, rows[i].second, i == 0);
    out += rows[i].first.first + " (x) " + rows[i].first.second;
  }
  return out;
}

std::string to_string(const PrimitiveExpansion& e) {
  std::vector<std::pair<std::string, std::uint64_t>> rows;
  for (const auto& [blocks, count] : e.terms) {
    std::vector<std::string> names;
    for (const Graph& b : blocks) names.push_back("pi(" + emit_graph6(b) + ")");
    std::sort(names.begin(), names.end());
    std::string term;
    for (const auto& nm : names) term += (term.empty() ? "" : " ") + nm;
    rows.emplace_back(term, count);
  }
  std::sort(rows.begin(), rows.end());
  std::string out;
  for (const auto& [term, count] : rows) {
    if (!out.empty()) out += " + ";
    out += std::to_string(count) + " " + term;
  }
  return out;
}

}  // namespace kpg
