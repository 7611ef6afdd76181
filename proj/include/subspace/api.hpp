#pragma once

#include <optional>
#include <string>

#include "subspace/engine.hpp"

namespace subspace {
namespace api {

struct Response {
  int status = 200;  // 200, 400 (validation), 404 (outside the grid)
  std::string body;  // JSON text
};

// JSON for one database cell in the published schema; no k = mixed dimension
Response query(const engine::Table& tab, long q, long n, long d,
               std::optional<long> k);

// blocking HTTP service: GET /api/{q}/{n}/{d}/{k}/ and /api/{q}/{n}/{d}/
bool serve(const engine::Table& tab, int port);

}  // namespace api
}  // namespace subspace
