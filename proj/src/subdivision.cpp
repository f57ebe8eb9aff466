#include "tfano/subdivision.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace tfano {

std::vector<Polyhedron> all_faces(const Polyhedron& p) {
  std::vector<Polyhedron> out{p};
  std::set<Polyhedron> seen{p};
  for (std::size_t i = 0; i < out.size(); ++i) {
    if (out[i].dim() <= 0) continue;
    for (auto& f : out[i].facets())
      if (seen.insert(f).second) out.push_back(f);
  }
  return out;
}

Subdivision::Subdivision(std::size_t dim, std::vector<Polyhedron> cells) : dim_(dim), cells_(std::move(cells)) {
  for (const auto& c : cells_)
    if (c.ambient_dim() != dim) throw Error(ErrorCode::IncompatibleDimension, "cell dimension");
  std::sort(cells_.begin(), cells_.end());
  cells_.erase(std::unique(cells_.begin(), cells_.end()), cells_.end());
}

std::vector<RatVec> Subdivision::vertices() const {
  std::set<RatVec> v;
  for (const auto& c : cells_) v.insert(c.vertices().begin(), c.vertices().end());
  return {v.begin(), v.end()};
}

std::vector<Cone> Subdivision::tail_cones() const {
  std::set<Cone> t;
  for (const auto& c : cells_) t.insert(Cone::from_generators(dim_, c.rays()));
  return {t.begin(), t.end()};
}

const Polyhedron* Subdivision::cell_with_tail(const Cone& sigma) const {
  for (const auto& c : cells_)
    if (c.rays() == sigma.rays()) return &c;
  return nullptr;
}

std::vector<Polyhedron> Subdivision::faces() const {
  std::set<Polyhedron> all;
  for (const auto& c : cells_)
    for (auto& f : all_faces(c)) all.insert(f);
  return {all.begin(), all.end()};
}

Subdivision Subdivision::translated(const RatVec& v) const {
  std::vector<Polyhedron> c;
  for (const auto& x : cells_) c.push_back(x.translated(v));
  return Subdivision(dim_, c);
}

Subdivision Subdivision::linear_image(const RatMatrix& f) const {
  std::vector<Polyhedron> c;
  for (const auto& x : cells_) c.push_back(x.linear_image(f));
  return Subdivision(f.rows(), c);
}

std::vector<Problem> completeness_problems(const Subdivision& s) {
  std::vector<Problem> out;
  if (s.cells().empty()) {
    out.push_back({"complete", "no cells"});
    return out;
  }
  for (const auto& c : s.cells())
    if (!c.full_dimensional()) out.push_back({"complete", "cell with vertices " + to_string(c.vertices()[0]) + "... is not full-dimensional"});
  if (!out.empty()) return out;
  std::map<Polyhedron, int> count;
  for (const auto& c : s.cells())
    for (auto& f : c.facets()) ++count[f];
  for (const auto& [f, n] : count)
    if (n != 2)
      out.push_back({"complete", "facet through " + to_string(f.vertices()[0]) + " shared by " + std::to_string(n) + " cell(s)"});
  const auto& cs = s.cells();
  for (std::size_t i = 0; i < cs.size(); ++i)
    for (std::size_t j = i + 1; j < cs.size(); ++j) {
      auto x = intersection(cs[i], cs[j]);
      if (x && x->full_dimensional()) out.push_back({"complete", "overlapping cells"});
      else if (x && !(x->is_face_of(cs[i]) && x->is_face_of(cs[j])))
        out.push_back({"complete", "cells do not meet in a common face"});
    }
  return out;
}

Subdivision common_refinement(const std::vector<Subdivision>& subs) {
  if (subs.empty()) throw Error(ErrorCode::Invalid, "refinement of nothing");
  std::size_t d = subs[0].ambient_dim();
  std::vector<Polyhedron> cur = subs[0].cells();
  for (std::size_t k = 1; k < subs.size(); ++k) {
    if (subs[k].ambient_dim() != d) throw Error(ErrorCode::IncompatibleDimension, "common refinement");
    std::vector<Polyhedron> next;
    for (const auto& a : cur)
      for (const auto& b : subs[k].cells()) {
        auto x = intersection(a, b);
        if (x && x->full_dimensional()) next.push_back(*x);
      }
    cur = std::move(next);
  }
  return Subdivision(d, cur);
}

Fan::Fan(std::size_t dim, std::vector<Cone> maximal) : dim_(dim), maximal_(std::move(maximal)) {
  std::sort(maximal_.begin(), maximal_.end());
  maximal_.erase(std::unique(maximal_.begin(), maximal_.end()), maximal_.end());
}

std::vector<IntVec> Fan::rays() const {
  std::set<IntVec> r;
  for (const auto& c : maximal_) r.insert(c.rays().begin(), c.rays().end());
  return {r.begin(), r.end()};
}

std::vector<Cone> Fan::cones() const {
  std::set<Cone> all;
  for (const auto& c : maximal_)
    for (auto& f : c.faces()) all.insert(f);
  return {all.begin(), all.end()};
}

Subdivision Fan::as_subdivision() const {
  std::vector<Polyhedron> cells;
  for (const auto& c : maximal_) cells.push_back(c.as_polyhedron());
  return Subdivision(dim_, cells);
}

bool Fan::complete() const { return completeness_problems(as_subdivision()).empty(); }

}  // namespace tfano
