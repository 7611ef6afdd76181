#include "subspace/api.hpp"

#include <iostream>

#include "httplib.h"

namespace subspace {
namespace api {

namespace {

// hand-rolled emitter: bound values routinely exceed 64 bit integers, so the
// usual json libraries would truncate; the schema is flat enough to print
std::string escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out;
}

void append_constraints(std::string& os, const char* key,
                        const std::vector<BoundRecord>& recs, Direction dir) {
  os += '"';
  os += key;
  os += "\": [";
  bool first = true;
  for (const auto& r : recs) {
    if (r.direction != dir) continue;
    if (!first) os += ", ";
    first = false;
    os += "{\"parameter\": \"" + escape(r.parameter) + "\", \"name\": \"" +
          escape(r.id) + "\", \"value\": " + qcalc::to_string(r.value) + "}";
  }
  os += ']';
}

std::string error_body(const std::string& msg) {
  return "{\"error\": \"" + escape(msg) + "\"}";
}

std::string cell_body(const engine::Table& tab, long q, long n, long d,
                      std::optional<long> k) {
  static const std::vector<BoundRecord> no_records;
  const engine::CellState* cell = nullptr;
  Int lower, upper;
  bool aliased = false;
  CdcParams canon{q, n, d, k ? *k : -1};
  if (k) {
    auto norm = normalize_cdc({q, n, d, *k});
    if (norm.trivial) {
      lower = upper = *norm.trivial;
    } else {
      canon = norm.canonical;
      aliased = norm.aliased;
      cell = tab.cdc_cell(q, canon.n, canon.d, canon.k);
      lower = tab.cdc_lower(q, n, d, *k);
      upper = tab.cdc_upper(q, n, d, *k);
    }
  } else {
    cell = tab.mdc_cell(q, n, d);
    lower = tab.mdc_lower(q, n, d);
    upper = tab.mdc_upper(q, n, d);
  }
  const std::vector<BoundRecord>& recs = cell ? cell->records : no_records;

  std::string os = "{";
  append_constraints(os, "upper_bound_constraints", recs, Direction::upper);
  os += ", \"known_codes\": []";
  os += ", \"upper_bound\": " + qcalc::to_string(upper);
  os += ", \"classified\": ";
  os += cell && cell->classified ? "true" : "false";
  os += ", \"lower_bound\": " + qcalc::to_string(lower);
  os += ", ";
  append_constraints(os, "lower_bound_constraints", recs, Direction::lower);
  os += ", \"request\": [" + std::to_string(q) + ", " + std::to_string(n) +
        ", " + std::to_string(d);
  if (k) os += ", " + std::to_string(*k);
  os += ']';
  if (aliased) {
    os += ", \"nondeduced\": [" + std::to_string(q) + ", " +
          std::to_string(canon.n) + ", " + std::to_string(canon.d) + ", " +
          std::to_string(canon.k) + "]";
  }
  if (cell && cell->lmrd)
    os += ", \"liftedmrdsizebound\": " + qcalc::to_string(*cell->lmrd);
  os += ", \"comments\": \"" + escape(cell ? cell->comment : "") + "\", ";
  append_constraints(os, "equal_bound_constraints", recs, Direction::exact);
  os += '}';
  return os;
}

}  // namespace

Response query(const engine::Table& tab, long q, long n, long d,
               std::optional<long> k) {
  if (!is_prime_power(q))
    return {400, error_body("q must be a prime power")};
  long nmax = tab.config().nmax;
  std::optional<std::string> bad =
      k ? validate_cdc({q, n, d, *k}, nmax) : validate_mdc({q, n, d}, nmax);
  if (bad) return {404, error_body(*bad)};
  if (q > tab.config().qmax) return {404, error_body("q out of range")};
  return {200, cell_body(tab, q, n, d, k)};
}

bool serve(const engine::Table& tab, int port) {
  httplib::Server srv;
  auto handle = [&tab](const httplib::Request& req, httplib::Response& res,
                       bool with_k) {
    Response out;
    try {
      long q = std::stol(req.matches[1]);
      long n = std::stol(req.matches[2]);
      long d = std::stol(req.matches[3]);
      std::optional<long> k;
      if (with_k) k = std::stol(req.matches[4]);
      out = query(tab, q, n, d, k);
    } catch (const std::exception&) {
      out = {400, error_body("unparsable parameters")};
    }
    res.status = out.status;
    res.set_content(out.body, "application/json");
  };
  srv.Get(R"(/api/(\d+)/(\d+)/(\d+)/(\d+)/?)",
          [&](const httplib::Request& req, httplib::Response& res) {
            handle(req, res, true);
          });
  srv.Get(R"(/api/(\d+)/(\d+)/(\d+)/?)",
          [&](const httplib::Request& req, httplib::Response& res) {
            handle(req, res, false);
          });
  std::cerr << "serving on port " << port << "\n";
  return srv.listen("0.0.0.0", port);
}

}  // namespace api
}  // namespace subspace
