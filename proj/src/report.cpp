#include "twistroot/report.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <sstream>
#include <thread>

#include "twistroot/polygon.hpp"
#include "twistroot/rootcalc.hpp"
#include "twistroot/symplectic.hpp"

namespace twistroot {

namespace {

using Params = std::vector<std::pair<std::string, long long>>;
using Body = std::function<std::pair<bool, Json>()>;

// Wraps a check body with timing and error folding so a task never throws.
Task make_task(std::string name, Params params, Body body) {
  std::sort(params.begin(), params.end());
  return [name = std::move(name), params = std::move(params), body = std::move(body)]() {
    VerificationRecord r;
    r.case_name = name;
    r.parameters = params;
    const auto start = std::chrono::steady_clock::now();
    try {
      auto [ok, witness] = body();
      r.status = ok ? VerificationRecord::Status::pass : VerificationRecord::Status::fail;
      r.witness = std::move(witness);
    } catch (const Error& e) {
      r.status = VerificationRecord::Status::error;
      r.witness = Json{{"error", e.what()}};
    }
    r.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                       std::chrono::steady_clock::now() - start)
                       .count();
    return r;
  };
}

Json matrix_json(const IntegerMatrix& m) {
  Json rows = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(m.at(r, c).str());
    rows.push_back(std::move(row));
  }
  return rows;
}

Json class_json(const HomologyClass& v) {
  Json out = Json::array();
  for (const Int& c : v) out.push_back(c.str());
  return out;
}

}  // namespace

std::string rational_string(const Rational& r) {
  const Int num = numerator(r);
  const Int den = denominator(r);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

std::string status_name(VerificationRecord::Status s) {
  switch (s) {
    case VerificationRecord::Status::pass: return "pass";
    case VerificationRecord::Status::fail: return "fail";
    case VerificationRecord::Status::error: return "error";
  }
  return "error";
}

VerificationRecord::Status status_from_name(const std::string& name) {
  if (name == "pass") return VerificationRecord::Status::pass;
  if (name == "fail") return VerificationRecord::Status::fail;
  if (name == "error") return VerificationRecord::Status::error;
  throw ParseError("unknown record status '" + name + "'");
}

Json to_json(const VerificationRecord& r) {
  Json j;
  j["case_name"] = r.case_name;
  Json params = Json::object();
  for (const auto& [key, value] : r.parameters) params[key] = value;
  j["parameters"] = std::move(params);
  j["status"] = status_name(r.status);
  j["witness"] = r.witness;
  j["elapsed_ms"] = r.elapsed_ms;
  return j;
}

VerificationRecord record_from_json(const Json& j) {
  VerificationRecord r;
  r.case_name = j.at("case_name").get<std::string>();
  for (const auto& [key, value] : j.at("parameters").items()) {
    r.parameters.emplace_back(key, value.get<long long>());
  }
  std::sort(r.parameters.begin(), r.parameters.end());
  r.status = status_from_name(j.at("status").get<std::string>());
  r.witness = j.value("witness", Json::object());
  r.elapsed_ms = j.at("elapsed_ms").get<long long>();
  return r;
}

std::string human_line(const VerificationRecord& r) {
  std::ostringstream out;
  switch (r.status) {
    case VerificationRecord::Status::pass: out << "[PASS] "; break;
    case VerificationRecord::Status::fail: out << "[FAIL] "; break;
    case VerificationRecord::Status::error: out << "[ERROR] "; break;
  }
  out << r.case_name;
  for (const auto& [key, value] : r.parameters) out << ' ' << key << '=' << value;
  out << " (" << r.elapsed_ms << " ms)";
  if (r.status == VerificationRecord::Status::error && r.witness.contains("error")) {
    out << ": " << r.witness["error"].get<std::string>();
  }
  return out.str();
}

void sort_records(std::vector<VerificationRecord>& records) {
  std::sort(records.begin(), records.end(),
            [](const VerificationRecord& a, const VerificationRecord& b) {
              if (a.case_name != b.case_name) return a.case_name < b.case_name;
              return a.parameters < b.parameters;
            });
}

bool all_passed(const std::vector<VerificationRecord>& records) {
  return std::all_of(records.begin(), records.end(), [](const VerificationRecord& r) {
    return r.status == VerificationRecord::Status::pass;
  });
}

std::vector<VerificationRecord> run_tasks(const std::vector<Task>& tasks, std::size_t jobs) {
  std::vector<VerificationRecord> records(tasks.size());
  if (jobs <= 1 || tasks.size() <= 1) {
    for (std::size_t i = 0; i < tasks.size(); ++i) records[i] = tasks[i]();
  } else {
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
      for (;;) {
        const std::size_t i = next.fetch_add(1);
        if (i >= tasks.size()) return;
        records[i] = tasks[i]();
      }
    };
    std::vector<std::thread> pool;
    const std::size_t width = std::min(jobs, tasks.size());
    pool.reserve(width);
    for (std::size_t t = 0; t < width; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  sort_records(records);
  return records;
}

std::vector<Task> chain_tasks(std::size_t k_low, std::size_t k_high, LetterBudget budget) {
  std::vector<Task> tasks;
  for (std::size_t k = k_low; k <= k_high; ++k) {
    tasks.push_back(make_task("chain_relation", {{"k", static_cast<long long>(k)}}, [k, budget] {
      Automorphism lhs = artin_power(chain_word(k), k, budget);
      Automorphism rhs = artin_automorphism(full_twist(k + 1), budget);
      Json w{{"strands", static_cast<long long>(k + 1)},
             {"image_letters", static_cast<long long>(lhs.forward().total_image_length())}};
      return std::pair{lhs == rhs, std::move(w)};
    }));
    tasks.push_back(
        make_task("full_twist_centrality", {{"k", static_cast<long long>(k)}}, [k, budget] {
          Json w{{"strands", static_cast<long long>(k + 1)}};
          return std::pair{verify_centrality(k, budget), std::move(w)};
        }));
  }
  return tasks;
}

std::vector<Task> root_tasks(long long g_low, long long g_high) {
  std::vector<Task> tasks;
  for (long long g = g_low; g <= g_high; ++g) {
    tasks.push_back(make_task("root_identity", {{"g", g}}, [g] {
      const bool identity_ok = verify_root_identity(g);
      const SmithInvariants s = presentation_invariants(g);
      const bool certified = s.invariant_factors == std::vector<Int>{1} && s.free_rank == 1;
      Json factors = Json::array();
      for (const Int& f : s.invariant_factors) factors.push_back(f.str());
      Json w{{"root_order", 2 * g - 1},
             {"invariant_factors", std::move(factors)},
             {"free_rank", static_cast<long long>(s.free_rank)}};
      return std::pair{identity_ok && certified, std::move(w)};
    }));
  }
  return tasks;
}

std::vector<Task> half_twist_tasks(long long n_low, long long n_high) {
  std::vector<Task> tasks;
  for (long long n = n_low; n <= n_high; ++n) {
    tasks.push_back(make_task("half_twist", {{"n", n}}, [n]() -> std::pair<bool, Json> {
      HalfTwistWitness witness;
      try {
        witness = half_twist_witness(n);
      } catch (const ConstructionGap& e) {
        return {false, Json{{"reason", e.what()}}};
      }
      const TwistLedger ledger = half_twist_ledger(n);
      const bool ok = witness.q > 1 && witness.q % 2 == 1 && ledger_check(ledger);
      Rational sum = 0;
      for (const Rational& c : ledger.contributions) sum += c;
      Json w{{"q", witness.q},
             {"p", witness.p},
             {"central", witness.central},
             {"derived", witness.derived},
             {"ledger_sum", rational_string(sum)}};
      return {ok, std::move(w)};
    }));
  }
  return tasks;
}

std::vector<Task> symplectic_tasks(std::size_t g_low, std::size_t g_high) {
  std::vector<Task> tasks;
  for (std::size_t g = g_low; g <= g_high; ++g) {
    tasks.push_back(make_task("homological_chain", {{"g", static_cast<long long>(g)}}, [g] {
      const HomologicalChain chain = verify_homological_chain(g);
      Json w{{"class", class_json(chain.d)}, {"primitive", chain.primitive}};
      return std::pair{chain.primitive, std::move(w)};
    }));
    tasks.push_back(make_task("homological_root", {{"g", static_cast<long long>(g)}}, [g] {
      Json w{{"root_order", static_cast<long long>(2 * g - 1)}};
      return std::pair{verify_homological_root(g), std::move(w)};
    }));
  }
  return tasks;
}

std::vector<Task> paper_cube_tasks() {
  std::vector<Task> tasks;
  tasks.push_back(make_task("paper_cube", {}, [] {
    const bool ok = paper_cube_example();
    Json w{{"root", matrix_json(paper_cube_root())}};
    if (auto form = paper_cube_invariant_form()) w["invariant_form"] = matrix_json(*form);
    return std::pair{ok, std::move(w)};
  }));
  for (long long dim : {6LL, 8LL, 10LL}) {
    tasks.push_back(make_task("stabilized_cube", {{"dim", dim}}, [dim] {
      const auto d = static_cast<std::size_t>(dim);
      const IntegerMatrix root = stabilize(paper_cube_root(), d);
      const IntegerMatrix target = stabilize(paper_cube_target(), d);
      bool ok = power(root, 3) == target;
      Json w = Json::object();
      if (auto form = paper_cube_invariant_form()) {
        // The invariant form extends by standard blocks on the new handles.
        IntegerMatrix j(d, d);
        for (std::size_t r = 0; r < 4; ++r)
          for (std::size_t c = 0; c < 4; ++c) j.at(r, c) = form->at(r, c);
        for (std::size_t i = 4; i + 1 < d; i += 2) {
          j.at(i, i + 1) = 1;
          j.at(i + 1, i) = -1;
        }
        const bool preserved = transpose(root) * j * root == j;
        w["form_preserved"] = preserved;
        ok = ok && preserved;
      }
      return std::pair{ok, std::move(w)};
    }));
  }
  return tasks;
}

std::vector<Task> nielsen_tasks(std::size_t n_low, std::size_t n_high) {
  std::vector<Task> tasks;
  for (std::size_t n = n_low; n <= n_high; ++n) {
    tasks.push_back(make_task("nielsen_root", {{"n", static_cast<long long>(n)}}, [n] {
      const Automorphism root = nielsen_root(n);
      const Automorphism square = compose(root, root);
      const bool ok = square == nielsen_transformation(n);
      Json w{{"square", render(square.forward())}};
      return std::pair{ok, std::move(w)};
    }));
  }
  return tasks;
}

std::vector<Task> nielsen_matrix_tasks(std::size_t n_low, std::size_t n_high) {
  std::vector<Task> tasks;
  for (std::size_t n = n_low; n <= n_high; ++n) {
    tasks.push_back(make_task("nielsen_matrix_root", {{"n", static_cast<long long>(n)}}, [n] {
      const IntegerMatrix root = nielsen_sl_root(n);
      const Int det = determinant(root);
      const bool square_ok = root * root == elementary_square(n);
      const IntegerMatrix ab = abelianize(nielsen_root(n));
      const bool consistent = ab * ab == elementary_square(n);
      Json w{{"det", det.str()}, {"abelianized_consistent", consistent}};
      return std::pair{square_ok && det == 1 && consistent, std::move(w)};
    }));
  }
  return tasks;
}

std::vector<Task> sl2_tasks(long long entry_bound, unsigned long long max_power) {
  std::vector<Task> tasks;
  tasks.push_back(make_task(
      "sl2_search",
      {{"bound", entry_bound}, {"max_power", static_cast<long long>(max_power)}},
      [entry_bound, max_power] {
        const auto findings = sl2_root_search(entry_bound, max_power);
        Json list = Json::array();
        for (const Sl2Finding& f : findings) {
          list.push_back(Json{{"matrix", matrix_json(f.root)},
                              {"exponent", static_cast<long long>(f.exponent)}});
        }
        Json w{{"findings", std::move(list)}};
        return std::pair{findings.empty(), std::move(w)};
      }));
  return tasks;
}

std::vector<Task> polygon_tasks(std::size_t g_low, std::size_t g_high) {
  std::vector<Task> tasks;
  for (std::size_t g = g_low; g <= g_high; ++g) {
    tasks.push_back(make_task("polygon_rotation", {{"g", static_cast<long long>(g)}}, [g] {
      const SurfaceInvariants inv = surface_invariants(build_polygon(g));
      const RotationMap rot = rotation_map(g);
      const bool ok = verify_geometric_root(g);
      Json w{{"vertex_orbits", static_cast<long long>(inv.vertex_orbits)},
             {"edges", static_cast<long long>(inv.edges)},
             {"faces", static_cast<long long>(inv.faces)},
             {"euler_characteristic", inv.euler_characteristic},
             {"genus", static_cast<long long>(inv.genus)},
             {"shift", static_cast<long long>(rot.shift)},
             {"order", static_cast<long long>(rot.order_on_surface)},
             {"rotation_numbers",
              Json::array({rational_string(rot.fixed_point_rotation_numbers[0]),
                           rational_string(rot.fixed_point_rotation_numbers[1])})}};
      return std::pair{ok, std::move(w)};
    }));
  }
  return tasks;
}

}  // namespace twistroot
