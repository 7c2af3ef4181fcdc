#include "hof/diff_poly.hpp"

#include <cmath>
#include <sstream>

namespace hof {

namespace {
void trim(DiffPoly::Monomial& m) {
  while (!m.empty() && m.back() == 0) m.pop_back();
}
}  // namespace

void DiffPoly::add_term(Monomial m, std::int64_t c) {
  if (c == 0) return;
  trim(m);
  auto it = terms_.find(m);
  if (it == terms_.end()) {
    terms_.emplace(std::move(m), c);
  } else {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

DiffPoly DiffPoly::constant(std::int64_t c) {
  DiffPoly p;
  p.add_term({}, c);
  return p;
}

DiffPoly DiffPoly::kappa(int j) {
  DiffPoly p;
  Monomial m(j + 1, 0);
  m[j] = 1;
  p.add_term(std::move(m), 1);
  return p;
}

DiffPoly DiffPoly::operator+(const DiffPoly& o) const {
  DiffPoly r = *this;
  for (const auto& [m, c] : o.terms_) r.add_term(m, c);
  return r;
}

DiffPoly DiffPoly::operator-(const DiffPoly& o) const {
  DiffPoly r = *this;
  for (const auto& [m, c] : o.terms_) r.add_term(m, -c);
  return r;
}

DiffPoly DiffPoly::scaled(std::int64_t c) const {
  DiffPoly r;
  for (const auto& [m, coeff] : terms_) r.add_term(m, coeff * c);
  return r;
}

DiffPoly DiffPoly::operator*(const DiffPoly& o) const {
  DiffPoly r;
  for (const auto& [ma, ca] : terms_) {
    for (const auto& [mb, cb] : o.terms_) {
      Monomial m(std::max(ma.size(), mb.size()), 0);
      for (size_t i = 0; i < ma.size(); ++i) m[i] += ma[i];
      for (size_t i = 0; i < mb.size(); ++i) m[i] += mb[i];
      r.add_term(std::move(m), ca * cb);
    }
  }
  return r;
}

DiffPoly DiffPoly::arclength_derivative() const {
  DiffPoly r;
  for (const auto& [m, c] : terms_) {
    for (size_t j = 0; j < m.size(); ++j) {
      if (m[j] == 0) continue;
      Monomial d = m;
      d[j] -= 1;
      if (d.size() < j + 2) d.resize(j + 2, 0);
      d[j + 1] += 1;
      r.add_term(std::move(d), c * m[j]);
    }
  }
  return r;
}

double DiffPoly::evaluate(std::span<const double> jet) const {
  double acc = 0.0;
  for (const auto& [m, c] : terms_) {
    double t = static_cast<double>(c);
    for (size_t j = 0; j < m.size(); ++j) {
      for (int e = 0; e < m[j]; ++e) t *= jet[j];
    }
    acc += t;
  }
  return acc;
}

int DiffPoly::max_variable() const {
  int mv = -1;
  for (const auto& [m, c] : terms_)
    mv = std::max(mv, static_cast<int>(m.size()) - 1);
  return mv;
}

bool DiffPoly::is_homogeneous(int weight) const {
  for (const auto& [m, c] : terms_) {
    int w = 0;
    for (size_t j = 0; j < m.size(); ++j) w += m[j] * static_cast<int>(j + 1);
    if (w != weight) return false;
  }
  return true;
}

std::string DiffPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    if (!first) os << (c >= 0 ? " + " : " - ");
    else if (c < 0) os << "-";
    first = false;
    const std::int64_t ac = std::abs(c);
    bool printed = false;
    if (ac != 1 || m.empty()) {
      os << ac;
      printed = true;
    }
    for (size_t j = 0; j < m.size(); ++j) {
      if (m[j] == 0) continue;
      if (printed) os << "*";
      os << "k" << j;
      if (m[j] > 1) os << "^" << m[j];
      printed = true;
    }
  }
  return os.str();
}

}  // namespace hof
