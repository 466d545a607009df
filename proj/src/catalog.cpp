#include "tubecat/fusion_data.hpp"
#include <map>

namespace tubecat {
namespace {
const char* k_vec_z2 = R"json({
  "rank": 2,
  "labels": ["1", "g"],
  "dual": [0, 1],
  "N": [
    [0, 0, 0, 1], [0, 1, 1, 1], [1, 0, 1, 1], [1, 1, 0, 1]
  ],
  "qdim": [1, 1],
  "F": [
    [1, 1, 1, 1, 0, 0, 0, 0, 0, 0, 1, 0]
  ],
  "R": [
    [1, 1, 0, 0, 0, 1, 0]
  ]
}
)json";

const char* k_vec_z3 = R"json({
  "rank": 3,
  "labels": ["1", "g", "gg"],
  "dual": [0, 2, 1],
  "N": [
    [0, 0, 0, 1], [0, 1, 1, 1], [0, 2, 2, 1],
    [1, 0, 1, 1], [1, 1, 2, 1], [1, 2, 0, 1],
    [2, 0, 2, 1], [2, 1, 0, 1], [2, 2, 1, 1]
  ],
  "qdim": [1, 1, 1],
  "F": [
    [1, 1, 1, 0, 2, 2, 0, 0, 0, 0, 1, 0],
    [1, 1, 2, 1, 2, 0, 0, 0, 0, 0, 1, 0],
    [1, 2, 1, 1, 0, 0, 0, 0, 0, 0, 1, 0],
    [1, 2, 2, 2, 0, 1, 0, 0, 0, 0, 1, 0],
    [2, 1, 1, 1, 0, 2, 0, 0, 0, 0, 1, 0],
    [2, 1, 2, 2, 0, 0, 0, 0, 0, 0, 1, 0],
    [2, 2, 1, 2, 1, 0, 0, 0, 0, 0, 1, 0],
    [2, 2, 2, 0, 1, 1, 0, 0, 0, 0, 1, 0]
  ],
  "R": [
    [1, 1, 2, 0, 0, 1, 0],
    [1, 2, 0, 0, 0, 1, 0],
    [2, 1, 0, 0, 0, 1, 0],
    [2, 2, 1, 0, 0, 1, 0]
  ]
}
)json";

const char* k_vec_z2_twisted = R"json({
  "rank": 2,
  "labels": ["1", "s"],
  "dual": [0, 1],
  "N": [
    [0, 0, 0, 1], [0, 1, 1, 1], [1, 0, 1, 1], [1, 1, 0, 1]
  ],
  "qdim": [1, 1],
  "F": [
    [1, 1, 1, 1, 0, 0, 0, 0, 0, 0, -1, 0]
  ],
  "R": [
    [1, 1, 0, 0, 0, 0, 1]
  ]
}
)json";

const char* k_fibonacci = R"json({
  "rank": 2,
  "labels": ["1", "tau"],
  "dual": [0, 1],
  "N": [
    [0, 0, 0, 1], [0, 1, 1, 1], [1, 0, 1, 1],
    [1, 1, 0, 1], [1, 1, 1, 1]
  ],
  "qdim": [1, "golden"],
  "F": [
    [1, 1, 1, 0, 1, 1, 0, 0, 0, 0, 1, 0],
    [1, 1, 1, 1, 0, 0, 0, 0, 0, 0, 0.6180339887498949, 0],
    [1, 1, 1, 1, 0, 1, 0, 0, 0, 0, 0.7861513777574233, 0],
    [1, 1, 1, 1, 1, 0, 0, 0, 0, 0, 0.7861513777574233, 0],
    [1, 1, 1, 1, 1, 1, 0, 0, 0, 0, -0.6180339887498949, 0]
  ],
  "R": [
    [1, 1, 0, 0, 0, -0.8090169943749475, -0.5877852522924731],
    [1, 1, 1, 0, 0, -0.30901699437494745, 0.9510565162951535]
  ]
}
)json";

const char* k_ising = R"json({
  "rank": 3,
  "labels": ["1", "sigma", "psi"],
  "dual": [0, 1, 2],
  "N": [
    [0, 0, 0, 1], [0, 1, 1, 1], [0, 2, 2, 1],
    [1, 0, 1, 1], [1, 1, 0, 1], [1, 1, 2, 1], [1, 2, 1, 1],
    [2, 0, 2, 1], [2, 1, 1, 1], [2, 2, 0, 1]
  ],
  "qdim": [1, "sqrt(2)", 1],
  "F": [
    [1, 1, 1, 1, 0, 0, 0, 0, 0, 0, 0.7071067811865476, 0],
    [1, 1, 1, 1, 0, 2, 0, 0, 0, 0, 0.7071067811865476, 0],
    [1, 1, 1, 1, 2, 0, 0, 0, 0, 0, 0.7071067811865476, 0],
    [1, 1, 1, 1, 2, 2, 0, 0, 0, 0, -0.7071067811865476, 0],
    [1, 1, 2, 2, 0, 1, 0, 0, 0, 0, 1, 0],
    [1, 1, 2, 0, 2, 1, 0, 0, 0, 0, 1, 0],
    [1, 2, 1, 0, 1, 1, 0, 0, 0, 0, 1, 0],
    [1, 2, 1, 2, 1, 1, 0, 0, 0, 0, -1, 0],
    [1, 2, 2, 1, 1, 0, 0, 0, 0, 0, 1, 0],
    [2, 1, 1, 0, 1, 2, 0, 0, 0, 0, 1, 0],
    [2, 1, 1, 2, 1, 0, 0, 0, 0, 0, 1, 0],
    [2, 1, 2, 1, 1, 1, 0, 0, 0, 0, -1, 0],
    [2, 2, 1, 1, 0, 1, 0, 0, 0, 0, 1, 0],
    [2, 2, 2, 2, 0, 0, 0, 0, 0, 0, 1, 0]
  ],
  "R": [
    [1, 1, 0, 0, 0, 0.9238795325112867, -0.3826834323650898],
    [1, 1, 2, 0, 0, 0.3826834323650898, 0.9238795325112867],
    [1, 2, 1, 0, 0, 0, -1],
    [2, 1, 1, 0, 0, 0, -1],
    [2, 2, 0, 0, 0, -1, 0]
  ]
}
)json";

const std::map<std::string, const char*>& table() {
  static const std::map<std::string, const char*> t = {
      {"vec_z2", k_vec_z2},
      {"vec_z3", k_vec_z3},
      {"vec_z2_twisted", k_vec_z2_twisted},
      {"fibonacci", k_fibonacci},
      {"ising", k_ising},
  };
  return t;
}

}  // namespace

std::vector<std::string> catalog_names() {
  std::vector<std::string> names;
  for (const auto& [name, text] : table()) names.push_back(name);
  return names;
}

const std::string& catalog_json(const std::string& name) {
  auto it = table().find(name);
  if (it == table().end()) throw ParseError("unknown catalog category: " + name);
  static std::map<std::string, std::string> cache;
  auto [cit, inserted] = cache.try_emplace(name, it->second);
  return cit->second;
}

FusionCategoryData catalog_category(const std::string& name) {
  return load_category(catalog_json(name));
}

}  // namespace tubecat
