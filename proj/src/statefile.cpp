#include "entbound/statefile.hpp"

#include <fstream>
#include <string>
#include <utility>

#include <nlohmann/json.hpp>

namespace entbound {

namespace {

using nlohmann::json;

Complex parse_complex(const json& entry) {
  if (!entry.is_array() || entry.size() != 2 || !entry[0].is_number() ||
      !entry[1].is_number()) {
    throw InvalidInput("complex entries must be [re, im] number pairs");
  }
  return Complex{entry[0].get<double>(), entry[1].get<double>()};
}

json dump_complex(const Complex& z) { return json::array({z.real(), z.imag()}); }

json read_json(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw IoError("cannot open " + path.string());
  }
  json j;
  try {
    in >> j;
  } catch (const json::parse_error& e) {
    throw InvalidInput("invalid JSON in " + path.string() + ": " + e.what());
  }
  return j;
}

void write_json(const std::filesystem::path& path, const json& j) {
  std::ofstream out(path);
  if (!out) {
    throw IoError("cannot write " + path.string());
  }
  out << j.dump(1) << "\n";
  if (!out) {
    throw IoError("write failed for " + path.string());
  }
}

json state_header(int dim_a, int dim_b, const char* kind) {
  json j;
  j["dims"] = json::array({dim_a, dim_b});
  j["kind"] = kind;
  return j;
}

}  // namespace

DensityMatrix LoadedState::as_density() const {
  if (is_pure()) return pure_to_density(*pure);
  return *mixed;
}

LoadedState load_state_file(const std::filesystem::path& path) {
  const json j = read_json(path);
  if (!j.is_object() || !j.contains("dims") || !j.contains("kind") ||
      !j.contains("data")) {
    throw InvalidInput("state file needs dims, kind and data fields");
  }
  const json& dims = j["dims"];
  if (!dims.is_array() || dims.size() != 2 ||
      !dims[0].is_number_integer() || !dims[1].is_number_integer()) {
    throw InvalidInput("dims must be a pair of integers");
  }
  const int dim_a = dims[0].get<int>();
  const int dim_b = dims[1].get<int>();
  const std::string kind = j["kind"].get<std::string>();
  const json& data = j["data"];
  if (!data.is_array()) {
    throw InvalidInput("data must be an array of [re, im] pairs");
  }

  const Eigen::Index total = static_cast<Eigen::Index>(dim_a) * dim_b;
  LoadedState out;
  if (kind == "pure") {
    if (static_cast<Eigen::Index>(data.size()) != total) {
      throw InvalidInput("pure data must hold m*n amplitudes");
    }
    ComplexVector amps(total);
    for (Eigen::Index i = 0; i < total; ++i) {
      amps[i] = parse_complex(data[i]);
    }
    out.pure = make_pure_state(dim_a, dim_b, std::move(amps));
  } else if (kind == "mixed") {
    if (static_cast<Eigen::Index>(data.size()) != total * total) {
      throw InvalidInput("mixed data must hold (m*n)^2 entries");
    }
    ComplexMatrix rho(total, total);
    for (Eigen::Index r = 0; r < total; ++r) {
      for (Eigen::Index c = 0; c < total; ++c) {
        rho(r, c) = parse_complex(data[r * total + c]);
      }
    }
    out.mixed = make_density_matrix(dim_a, dim_b, std::move(rho));
  } else {
    throw InvalidInput("kind must be \"pure\" or \"mixed\"");
  }
  return out;
}

void save_state_file(const std::filesystem::path& path, const PureState& psi) {
  json j = state_header(psi.dim_a, psi.dim_b, "pure");
  json data = json::array();
  for (Eigen::Index i = 0; i < psi.amplitudes.size(); ++i) {
    data.push_back(dump_complex(psi.amplitudes[i]));
  }
  j["data"] = std::move(data);
  write_json(path, j);
}

void save_state_file(const std::filesystem::path& path,
                     const DensityMatrix& rho) {
  json j = state_header(rho.dim_a, rho.dim_b, "mixed");
  json data = json::array();
  for (Eigen::Index r = 0; r < rho.matrix.rows(); ++r) {
    for (Eigen::Index c = 0; c < rho.matrix.cols(); ++c) {
      data.push_back(dump_complex(rho.matrix(r, c)));
    }
  }
  j["data"] = std::move(data);
  write_json(path, j);
}

}  // namespace entbound
