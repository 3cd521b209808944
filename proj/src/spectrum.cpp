#include "supergraph/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "supergraph/error.hpp"

namespace supergraph {

double Surd::to_double() const {
  return (static_cast<double>(r) + sign * std::sqrt(static_cast<double>(d))) / 2.0;
}

double numeric(const EigenValue& v) {
  if (auto p = std::get_if<double>(&v)) return *p;
  if (auto p = std::get_if<std::int64_t>(&v)) return static_cast<double>(*p);
  return std::get<Surd>(v).to_double();
}

std::string to_string(const EigenValue& v) {
  if (auto p = std::get_if<std::int64_t>(&v)) return std::to_string(*p);
  if (auto p = std::get_if<Surd>(&v)) {
    std::ostringstream out;
    out << "(" << p->r << (p->sign < 0 ? " - " : " + ") << "sqrt(" << p->d << "))/2";
    return out.str();
  }
  std::ostringstream out;
  out.precision(12);
  out << std::get<double>(v);
  return out.str();
}

Spectrum::Spectrum(std::vector<SpectrumEntry> entries, double merge_tol) {
  std::erase_if(entries, [](const SpectrumEntry& e) { return e.multiplicity == 0; });
  std::stable_sort(entries.begin(), entries.end(),
                   [](const SpectrumEntry& a, const SpectrumEntry& b) { return a.numeric() < b.numeric(); });
  for (auto& e : entries) {
    if (!entries_.empty() && std::abs(entries_.back().numeric() - e.numeric()) <= merge_tol) {
      auto& last = entries_.back();
      last.multiplicity += e.multiplicity;
      if (std::holds_alternative<double>(last.value)) last.value = e.value;
      continue;
    }
    entries_.push_back(std::move(e));
  }
}

Spectrum Spectrum::group(std::vector<double> values, double tol) {
  std::sort(values.begin(), values.end());
  std::vector<SpectrumEntry> entries;
  std::size_t start = 0;
  for (std::size_t i = 1; i <= values.size(); ++i) {
    if (i < values.size() && values[i] - values[i - 1] <= tol) continue;
    double sum = 0;
    for (std::size_t j = start; j < i; ++j) sum += values[j];
    entries.push_back({sum / static_cast<double>(i - start), i - start});
    start = i;
  }
  Spectrum out;
  out.entries_ = std::move(entries);
  return out;
}

Spectrum Spectrum::integers(const std::vector<std::pair<std::int64_t, std::size_t>>& values) {
  std::vector<SpectrumEntry> entries;
  for (const auto& [v, m] : values) entries.push_back({v, m});
  return Spectrum(std::move(entries));
}

std::size_t Spectrum::dimension() const {
  std::size_t total = 0;
  for (const auto& e : entries_) total += e.multiplicity;
  return total;
}

std::vector<double> Spectrum::expanded() const {
  std::vector<double> out;
  for (const auto& e : entries_) out.insert(out.end(), e.multiplicity, e.numeric());
  return out;
}

bool Spectrum::all_integer() const {
  return std::all_of(entries_.begin(), entries_.end(),
                     [](const SpectrumEntry& e) { return std::holds_alternative<std::int64_t>(e.value); });
}

PolynomialZ Spectrum::integer_char_poly() const {
  if (!all_integer()) throw InvalidParameter("spectrum has non-integer eigenvalues");
  PolynomialZ out = PolynomialZ::constant(1);
  for (const auto& e : entries_) out *= PolynomialZ::linear_power(BigInt(std::get<std::int64_t>(e.value)), e.multiplicity);
  return out;
}

std::string Spectrum::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (i) out += ", ";
    out += supergraph::to_string(entries_[i].value);
    if (entries_[i].multiplicity > 1) out += " (x" + std::to_string(entries_[i].multiplicity) + ")";
  }
  return out;
}

bool Spectrum::operator==(const Spectrum& other) const {
  if (entries_.size() != other.entries_.size()) return false;
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (entries_[i].multiplicity != other.entries_[i].multiplicity) return false;
    if (!(entries_[i].value == other.entries_[i].value)) return false;
  }
  return true;
}

bool multiset_match(const Spectrum& a, const Spectrum& b, double tol) {
  if (a.dimension() != b.dimension())
    throw SizeMismatch("spectra of dimension " + std::to_string(a.dimension()) + " and " +
                       std::to_string(b.dimension()));
  const auto x = a.expanded();
  const auto y = b.expanded();
  for (std::size_t i = 0; i < x.size(); ++i)
    if (std::abs(x[i] - y[i]) > tol) return false;
  return true;
}

Spectrum snap_to_integers(const Spectrum& spectrum, double tol) {
  std::vector<SpectrumEntry> entries;
  for (const auto& e : spectrum.entries()) {
    const double v = e.numeric();
    const double r = std::round(v);
    if (std::holds_alternative<double>(e.value) && std::abs(v - r) <= tol && std::abs(r) < 9e15)
      entries.push_back({static_cast<std::int64_t>(r), e.multiplicity});
    else
      entries.push_back(e);
  }
  return Spectrum(std::move(entries));
}

}  // namespace supergraph
