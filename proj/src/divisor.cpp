#include "xns/divisor.hpp"

#include <charconv>
#include <ostream>
#include <sstream>

namespace xns {

namespace {

std::int64_t parse_int(std::string_view token, const char* what) {
  if (token.empty())
    throw std::invalid_argument(std::string("empty ") + what + " field");
  std::int64_t value = 0;
  const char* first = token.data();
  const char* last = token.data() + token.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last)
    throw std::invalid_argument(std::string("invalid ") + what + " '" +
                                std::string(token) + "'");
  return value;
}

}  // namespace

DivisorClass::DivisorClass(int dim, std::int64_t degree,
                           std::vector<std::int64_t> mults)
    : dim_(dim), degree_(degree), mults_(std::move(mults)) {
  if (dim_ < 2)
    throw std::invalid_argument("ambient dimension must be at least 2");
}

DivisorClass DivisorClass::zero(int dim, std::size_t points) {
  return DivisorClass(dim, 0, std::vector<std::int64_t>(points, 0));
}

DivisorClass DivisorClass::hyperplane(int dim, std::size_t points) {
  return DivisorClass(dim, 1, std::vector<std::int64_t>(points, 0));
}

DivisorClass DivisorClass::exceptional(int dim, std::size_t points,
                                       std::size_t index) {
  if (index < 1 || index > points)
    throw std::invalid_argument("exceptional index out of range");
  std::vector<std::int64_t> m(points, 0);
  m[index - 1] = -1;
  return DivisorClass(dim, 0, std::move(m));
}

DivisorClass DivisorClass::canonical(int dim, std::size_t points) {
  return DivisorClass(dim, -std::int64_t(dim) - 1,
                      std::vector<std::int64_t>(points, -(dim - 1)));
}

std::int64_t DivisorClass::mult(std::size_t index) const {
  if (index < 1 || index > mults_.size())
    throw std::invalid_argument("multiplicity index out of range");
  return mults_[index - 1];
}

namespace {

void require_same_space(const DivisorClass& a, const DivisorClass& b) {
  if (a.dim() != b.dim())
    throw std::invalid_argument("ambient dimension mismatch");
  if (a.points() != b.points())
    throw std::invalid_argument("point count mismatch");
}

}  // namespace

DivisorClass DivisorClass::operator+(const DivisorClass& other) const {
  require_same_space(*this, other);
  std::vector<std::int64_t> m(mults_.size());
  for (std::size_t i = 0; i < m.size(); ++i)
    m[i] = checked_add(mults_[i], other.mults_[i]);
  return DivisorClass(dim_, checked_add(degree_, other.degree_), std::move(m));
}

DivisorClass DivisorClass::operator-(const DivisorClass& other) const {
  require_same_space(*this, other);
  std::vector<std::int64_t> m(mults_.size());
  for (std::size_t i = 0; i < m.size(); ++i)
    m[i] = checked_sub(mults_[i], other.mults_[i]);
  return DivisorClass(dim_, checked_sub(degree_, other.degree_), std::move(m));
}

DivisorClass DivisorClass::operator-() const {
  std::vector<std::int64_t> m(mults_.size());
  for (std::size_t i = 0; i < m.size(); ++i) m[i] = checked_sub(0, mults_[i]);
  return DivisorClass(dim_, checked_sub(0, degree_), std::move(m));
}

DivisorClass operator*(std::int64_t scalar, const DivisorClass& d) {
  std::vector<std::int64_t> m(d.mults_.size());
  for (std::size_t i = 0; i < m.size(); ++i)
    m[i] = checked_mul(scalar, d.mults_[i]);
  return DivisorClass(d.dim_, checked_mul(scalar, d.degree_), std::move(m));
}

std::string DivisorClass::pretty() const {
  std::ostringstream out;
  bool have_term = false;
  if (degree_ != 0) {
    if (degree_ == 1)
      out << "H";
    else if (degree_ == -1)
      out << "-H";
    else
      out << degree_ << "H";
    have_term = true;
  }
  for (std::size_t i = 0; i < mults_.size(); ++i) {
    std::int64_t m = mults_[i];
    if (m == 0) continue;
    // D = dH - sum m_i E_i, so positive m_i prints with a minus sign.
    if (have_term)
      out << (m > 0 ? " - " : " + ");
    else if (m > 0)
      out << "-";
    std::int64_t a = m > 0 ? m : -m;
    if (a != 1) out << a;
    out << "E" << (i + 1);
    have_term = true;
  }
  if (!have_term) out << "0";
  return out.str();
}

std::string DivisorClass::compact() const {
  std::ostringstream out;
  out << dim_ << ":" << degree_ << ":";
  for (std::size_t i = 0; i < mults_.size(); ++i) {
    if (i) out << ",";
    out << mults_[i];
  }
  return out.str();
}

nlohmann::json DivisorClass::to_json() const {
  return nlohmann::json{{"n", dim_}, {"d", degree_}, {"m", mults_}};
}

DivisorClass DivisorClass::parse(std::string_view text) {
  std::size_t start = text.find_first_not_of(" \t");
  if (start != std::string_view::npos && text[start] == '{')
    return from_json(nlohmann::json::parse(text));
  return parse_compact(text);
}

DivisorClass DivisorClass::parse_compact(std::string_view text) {
  std::size_t c1 = text.find(':');
  if (c1 == std::string_view::npos)
    throw std::invalid_argument("divisor literal must have form n:d:m1,...,ms");
  std::size_t c2 = text.find(':', c1 + 1);
  if (c2 == std::string_view::npos || text.find(':', c2 + 1) != std::string_view::npos)
    throw std::invalid_argument("divisor literal must have exactly three fields");

  std::int64_t n = parse_int(text.substr(0, c1), "dimension");
  if (n < 2 || n > 1'000'000)
    throw std::invalid_argument("ambient dimension out of range");
  std::int64_t d = parse_int(text.substr(c1 + 1, c2 - c1 - 1), "degree");

  std::vector<std::int64_t> m;
  std::string_view rest = text.substr(c2 + 1);
  if (!rest.empty()) {
    std::size_t pos = 0;
    while (true) {
      std::size_t comma = rest.find(',', pos);
      std::string_view token = comma == std::string_view::npos
                                   ? rest.substr(pos)
                                   : rest.substr(pos, comma - pos);
      m.push_back(parse_int(token, "multiplicity"));
      if (comma == std::string_view::npos) break;
      pos = comma + 1;
    }
  }
  return DivisorClass(int(n), d, std::move(m));
}

DivisorClass DivisorClass::from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("n") || !j.contains("d") || !j.contains("m"))
    throw std::invalid_argument("divisor object needs keys n, d, m");
  if (j.size() != 3)
    throw std::invalid_argument("divisor object must have exactly keys n, d, m");
  if (!j["n"].is_number_integer() || !j["d"].is_number_integer() ||
      !j["m"].is_array())
    throw std::invalid_argument("divisor object fields have wrong types");
  std::vector<std::int64_t> m;
  for (const auto& entry : j["m"]) {
    if (!entry.is_number_integer())
      throw std::invalid_argument("multiplicities must be integers");
    m.push_back(entry.get<std::int64_t>());
  }
  std::int64_t n = j["n"].get<std::int64_t>();
  if (n < 2 || n > 1'000'000)
    throw std::invalid_argument("ambient dimension out of range");
  return DivisorClass(int(n), j["d"].get<std::int64_t>(), std::move(m));
}

std::ostream& operator<<(std::ostream& os, const DivisorClass& d) {
  return os << d.pretty() << " on X(" << d.dim() << "," << d.points() << ")";
}

std::int64_t mukai_pairing(const DivisorClass& a, const DivisorClass& b) {
  if (a.dim() != b.dim())
    throw std::invalid_argument("pairing requires equal ambient dimensions");
  std::int64_t result = checked_mul(
      a.dim() - 1, checked_mul(a.degree(), b.degree()));
  // The shorter multiplicity vector is zero-padded: blowing down unused
  // points never changes the pairing.
  std::size_t common = std::min(a.points(), b.points());
  for (std::size_t i = 0; i < common; ++i)
    result = checked_sub(result, checked_mul(a.mults()[i], b.mults()[i]));
  return result;
}

std::int64_t adeg(const DivisorClass& d) {
  std::int64_t result = checked_mul(d.dim() + 1, d.degree());
  for (std::int64_t m : d.mults()) result = checked_sub(result, m);
  return result;
}

DivisorClass cone(const DivisorClass& d) {
  std::vector<std::int64_t> m;
  m.reserve(d.points() + 1);
  m.push_back(d.degree());
  m.insert(m.end(), d.mults().begin(), d.mults().end());
  return DivisorClass(d.dim() + 1, d.degree(), std::move(m));
}

std::int64_t chi(const DivisorClass& d) {
  std::int64_t n = d.dim();
  std::int64_t result = binomial(checked_add(d.degree(), n), n);
  for (std::int64_t m : d.mults())
    result = checked_sub(result, binomial(checked_add(m, n - 1), n));
  return result;
}

std::int64_t planar_genus(const DivisorClass& d) {
  if (d.dim() != 2)
    throw std::invalid_argument("planar genus is only defined for n = 2");
  // (d-1)(d-2) and m(m-1) are products of consecutive integers, hence even.
  std::int64_t g = checked_mul(checked_sub(d.degree(), 1),
                               checked_sub(d.degree(), 2)) / 2;
  for (std::int64_t m : d.mults())
    g = checked_sub(g, checked_mul(m, checked_sub(m, 1)) / 2);
  return g;
}

PlanarConditions planar_conditions(const DivisorClass& d) {
  if (d.dim() != 2)
    throw std::invalid_argument("planar conditions are only defined for n = 2");
  PlanarConditions c;
  c.self_pairing_minus_one = mukai_pairing(d, d) == -1;
  c.rational = planar_genus(d) == 0;
  c.adeg_one = adeg(d) == 1;
  c.chi_one = chi(d) == 1;
  return c;
}

}  // namespace xns
