#include "nhf/spectral.hpp"

#include <cmath>
#include <fstream>

namespace nhf {

std::string basis_name(Basis b) { return b == Basis::L ? "L" : "Lstar"; }

Basis basis_from_name(const std::string& s) {
  if (s == "L") return Basis::L;
  if (s == "Lstar" || s == "L*") return Basis::Lstar;
  throw Error(Status::parse, "unknown basis tag: '" + s + "' (want L or Lstar)");
}

double spectral_linf_diff(const SpectralField& a, const SpectralField& b) {
  a.check();
  b.check();
  require(a.K == b.K, Status::parse, "truncation mismatch");
  double m = 0.0;
  for (size_t i = 0; i < a.coeffs.size(); ++i)
    m = std::max(m, std::abs(a.coeffs[i] - b.coeffs[i]));
  return m;
}

double spectral_l2(const SpectralField& a) {
  a.check();
  long double acc = 0.0L;
  for (const cplx& z : a.coeffs) acc += static_cast<long double>(std::norm(z));
  return static_cast<double>(std::sqrt(acc));
}

json spectral_to_json(const SpectralField& f) {
  f.check();
  json j;
  j["K"] = f.K;
  j["basis"] = basis_name(f.basis);
  json arr = json::array();
  for (size_t i = 0; i < f.coeffs.size(); ++i) {
    const FreqIndex xi = f.freq_of(i);
    json e;
    e["xi1"] = xi.xi1;
    e["xi2"] = xi.xi2;
    e["re"] = f.coeffs[i].real();
    e["im"] = f.coeffs[i].imag();
    arr.push_back(std::move(e));
  }
  j["coeffs"] = std::move(arr);
  return j;
}

SpectralField spectral_from_json(const json& j) {
  try {
    require(j.is_object(), Status::parse, "spectral json: object expected");
    require(j.contains("K") && j["K"].is_number_integer(), Status::parse,
            "spectral json: integer field 'K' required");
    const int K = j["K"].get<int>();
    require(K >= 0 && K <= 100000, Status::parse, "spectral json: K out of range");
    const std::string btag = j.value("basis", std::string("L"));
    SpectralField f(K, basis_from_name(btag));
    if (j.contains("coeffs")) {
      require(j["coeffs"].is_array(), Status::parse,
              "spectral json: 'coeffs' must be an array");
      for (const auto& e : j["coeffs"]) {
        require(e.is_object() && e.contains("xi1") && e.contains("xi2"),
                Status::parse, "spectral json: coeff entries need xi1, xi2");
        const long long x1 = e["xi1"].get<long long>();
        const long long x2 = e["xi2"].get<long long>();
        require(std::llabs(x1) <= K && std::llabs(x2) <= K, Status::parse,
                "spectral json: coefficient frequency outside |xi| <= K");
        f.at(x1, x2) = cplx(e.value("re", 0.0), e.value("im", 0.0));
      }
    }
    return f;
  } catch (const Error&) {
    throw;
  } catch (const std::exception& ex) {
    throw Error(Status::parse, std::string("spectral json: ") + ex.what());
  }
}

void write_spectral_json(const SpectralField& f, const std::string& path) {
  std::ofstream out(path);
  require(out.good(), Status::parse, "cannot open for writing: " + path);
  out << spectral_to_json(f).dump(1, ' ') << '\n';
  require(out.good(), Status::parse, "write failed: " + path);
}

SpectralField read_spectral_json(const std::string& path) {
  std::ifstream in(path);
  require(in.good(), Status::parse, "cannot open: " + path);
  json j;
  try {
    j = json::parse(in);
  } catch (const std::exception& ex) {
    throw Error(Status::parse, "json parse error in " + path + ": " + ex.what());
  }
  return spectral_from_json(j);
}

}  // namespace nhf
