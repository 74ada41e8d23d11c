#include "qacert/qa.hpp"

#include <json.hpp>
#include <limits>
#include <map>

#include "qacert/errors.hpp"
#include "qacert/tait.hpp"

namespace qacert {

namespace {

long long checked_int64(const BigInt& v) {
  static const BigInt lo = std::numeric_limits<long long>::min();
  static const BigInt hi = std::numeric_limits<long long>::max();
  if (v < lo || v > hi)
    throw std::logic_error("determinant exceeds 64-bit certificate field");
  return v.convert_to<long long>();
}

struct SearchCtx {
  long long budget = 0;
  long long expansions = 0;
  std::map<std::string, bool> failed;  // canonical key -> complete failure
};

enum class Outcome { Certified, Failed, OutOfBudget };

// While certifying a connected sum, the factor certificates predict every
// determinant up to a fixed scale; candidates are filtered accordingly.
struct Guide {
  const QACertificate* node = nullptr;
  BigInt scale = 1;
  const QACertificate* next_root = nullptr;
};

Outcome search(const LinkDiagram& d, SearchCtx& ctx,
               std::unique_ptr<QACertificate>& out, const Guide* guide) {
  SimplifyResult s = simplify(d);
  if (s.diagram.empty() && s.diagram.free_circles == 1) {
    out = std::make_unique<QACertificate>();
    out->kind = QACertificate::Kind::Leaf;
    out->trace = s.trace;
    return Outcome::Certified;
  }

  std::string key = canonical_key(s.diagram);
  if (ctx.failed.count(key)) return Outcome::Failed;

  BigInt det = determinant_goeritz(s.diagram);
  if (det == 0) {
    ctx.failed[key] = true;  // sound regardless of guidance
    return Outcome::Failed;
  }

  Guide local;
  if (guide) {
    const QACertificate* gn = guide->node;
    BigInt scale = guide->scale;
    const QACertificate* nxt = guide->next_root;
    if (gn->kind == QACertificate::Kind::Leaf && nxt) {
      gn = nxt;
      scale = 1;
      nxt = nullptr;
    }
    if (gn->kind == QACertificate::Kind::Leaf) {
      guide = nullptr;  // guidance exhausted; continue unguided
    } else {
      if (BigInt(gn->det) * scale != det) return Outcome::Failed;
      local = {gn, scale, nxt};
      guide = &local;
    }
  }

  if (ctx.expansions >= ctx.budget) return Outcome::OutOfBudget;
  ++ctx.expansions;

  bool truncated = false;
  for (int c = 0; c < s.diagram.size(); ++c) {
    LinkDiagram d0 = smooth(s.diagram, c, SmoothType::Zero);
    LinkDiagram dinf = smooth(s.diagram, c, SmoothType::Infinity);
    BigInt b0 = determinant_goeritz(d0);
    BigInt binf = determinant_goeritz(dinf);
    if (b0 < 1 || binf < 1 || b0 + binf != det) continue;
    Guide g0, ginf;
    const Guide *pg0 = nullptr, *pginf = nullptr;
    if (guide) {
      if (b0 != BigInt(guide->node->det0) * guide->scale) continue;
      if (binf != BigInt(guide->node->det_inf) * guide->scale) continue;
      g0 = {guide->node->zero.get(), guide->scale, guide->next_root};
      ginf = {guide->node->inf.get(), guide->scale, guide->next_root};
      pg0 = &g0;
      pginf = &ginf;
    }
    std::unique_ptr<QACertificate> zero_cert, inf_cert;
    Outcome oz = search(d0, ctx, zero_cert, pg0);
    if (oz == Outcome::OutOfBudget) {
      truncated = true;
      continue;
    }
    if (oz != Outcome::Certified) continue;
    Outcome oi = search(dinf, ctx, inf_cert, pginf);
    if (oi == Outcome::OutOfBudget) {
      truncated = true;
      continue;
    }
    if (oi != Outcome::Certified) continue;

    out = std::make_unique<QACertificate>();
    out->kind = QACertificate::Kind::Branch;
    out->key = key;
    out->crossing = c;
    out->det = checked_int64(det);
    out->det0 = checked_int64(b0);
    out->det_inf = checked_int64(binf);
    out->zero = std::move(zero_cert);
    out->inf = std::move(inf_cert);
    return Outcome::Certified;
  }

  if (truncated) return Outcome::OutOfBudget;
  if (!guide) ctx.failed[key] = true;  // guided misses are not real failures
  return Outcome::Failed;
}

CertifyResult outcome_to_result(Outcome o, const LinkDiagram& d,
                                std::unique_ptr<QACertificate> cert,
                                long long expansions) {
  CertifyResult r;
  r.expansions = expansions;
  switch (o) {
    case Outcome::Certified:
      r.status = QAStatus::Certified;
      r.certificate = std::move(cert);
      break;
    case Outcome::Failed:
      if (determinant_goeritz(d) == 0) {
        r.status = QAStatus::NotQA;
        r.reason = "determinant is zero";
      } else {
        r.status = QAStatus::Unknown;
        r.reason = "no certificate tree found in the searched space";
      }
      break;
    case Outcome::OutOfBudget:
      r.status = QAStatus::Unknown;
      r.reason = "search budget exhausted";
      break;
  }
  return r;
}

}  // namespace

CertifyResult certify(const LinkDiagram& d, long long budget) {
  SearchCtx ctx;
  ctx.budget = budget;
  std::unique_ptr<QACertificate> cert;
  Outcome o = search(d, ctx, cert, nullptr);
  return outcome_to_result(o, d, std::move(cert), ctx.expansions);
}

namespace {

bool check_certificate(const QACertificate& cert, const LinkDiagram& d) {
  if (cert.kind == QACertificate::Kind::Leaf) {
    LinkDiagram cur = d;
    for (const auto& move : cert.trace)
      if (!apply_move(cur, move)) return false;
    return cur.empty() && cur.free_circles == 1;
  }
  SimplifyResult s = simplify(d);
  if (canonical_key(s.diagram) != cert.key) return false;
  if (cert.crossing < 0 || cert.crossing >= s.diagram.size()) return false;
  if (cert.det < 1 || cert.det0 < 1 || cert.det_inf < 1) return false;
  if (BigInt(cert.det0) + BigInt(cert.det_inf) != BigInt(cert.det))
    return false;
  if (determinant_goeritz(s.diagram) != cert.det) return false;
  LinkDiagram d0 = smooth(s.diagram, cert.crossing, SmoothType::Zero);
  LinkDiagram dinf = smooth(s.diagram, cert.crossing, SmoothType::Infinity);
  if (determinant_goeritz(d0) != cert.det0) return false;
  if (determinant_goeritz(dinf) != cert.det_inf) return false;
  if (!cert.zero || !cert.inf) return false;
  return check_certificate(*cert.zero, d0) &&
         check_certificate(*cert.inf, dinf);
}

}  // namespace

bool verify_certificate(const QACertificate& cert, const LinkDiagram& d) {
  try {
    return check_certificate(cert, d);
  } catch (const std::exception&) {
    return false;
  }
}

namespace {

nlohmann::ordered_json cert_to_json(const QACertificate& c) {
  nlohmann::ordered_json j;
  if (c.kind == QACertificate::Kind::Leaf) {
    j["kind"] = "leaf";
    nlohmann::ordered_json moves = nlohmann::ordered_json::array();
    for (const auto& m : c.trace) {
      nlohmann::ordered_json mj;
      mj["move"] = m.kind;
      mj["c1"] = m.c1;
      if (m.kind == "R2") mj["c2"] = m.c2;
      moves.push_back(mj);
    }
    j["trace"] = moves;
    return j;
  }
  j["kind"] = "branch";
  j["key"] = c.key;
  j["crossing"] = c.crossing;
  j["det"] = c.det;
  j["det0"] = c.det0;
  j["detInf"] = c.det_inf;
  j["zero"] = cert_to_json(*c.zero);
  j["inf"] = cert_to_json(*c.inf);
  return j;
}

std::unique_ptr<QACertificate> cert_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("kind") || !j["kind"].is_string())
    throw InvalidInputCertificate("certificate node must carry a kind");
  std::string kind = j["kind"].get<std::string>();
  auto c = std::make_unique<QACertificate>();
  if (kind == "leaf") {
    c->kind = QACertificate::Kind::Leaf;
    if (!j.contains("trace") || !j["trace"].is_array())
      throw InvalidInputCertificate("leaf node must carry a trace array");
    for (const auto& mj : j["trace"]) {
      if (!mj.is_object() || !mj.contains("move") || !mj["move"].is_string() ||
          !mj.contains("c1") || !mj["c1"].is_number_integer())
        throw InvalidInputCertificate("malformed move entry");
      SimplifyMove m;
      m.kind = mj["move"].get<std::string>();
      m.c1 = mj["c1"].get<int>();
      if (m.kind == "R2") {
        if (!mj.contains("c2") || !mj["c2"].is_number_integer())
          throw InvalidInputCertificate("R2 move needs two crossings");
        m.c2 = mj["c2"].get<int>();
      } else if (m.kind != "R1") {
        throw InvalidInputCertificate("unknown move kind " + m.kind);
      }
      c->trace.push_back(m);
    }
    return c;
  }
  if (kind != "branch")
    throw InvalidInputCertificate("unknown certificate node kind " + kind);
  c->kind = QACertificate::Kind::Branch;
  for (const char* field : {"key", "crossing", "det", "det0", "detInf",
                            "zero", "inf"})
    if (!j.contains(field))
      throw InvalidInputCertificate(std::string("branch node missing ") +
                                    field);
  if (!j["key"].is_string() || !j["crossing"].is_number_integer() ||
      !j["det"].is_number_integer() || !j["det0"].is_number_integer() ||
      !j["detInf"].is_number_integer())
    throw InvalidInputCertificate("branch node field types are wrong");
  c->key = j["key"].get<std::string>();
  c->crossing = j["crossing"].get<int>();
  c->det = j["det"].get<long long>();
  c->det0 = j["det0"].get<long long>();
  c->det_inf = j["detInf"].get<long long>();
  c->zero = cert_from_json(j["zero"]);
  c->inf = cert_from_json(j["inf"]);
  return c;
}

}  // namespace

std::string certificate_to_json(const QACertificate& cert) {
  return cert_to_json(cert).dump(2) + "\n";
}

std::unique_ptr<QACertificate> certificate_from_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw InvalidInputCertificate(std::string("certificate is not JSON: ") +
                                  e.what());
  }
  return cert_from_json(j);
}

SumCertifyResult qa_connected_sum(const LinkDiagram& da,
                                  const QACertificate& ca,
                                  const LinkDiagram& db,
                                  const QACertificate& cb, long long budget) {
  if (!verify_certificate(ca, da))
    throw InvalidInputCertificate("first factor certificate does not verify");
  if (!verify_certificate(cb, db))
    throw InvalidInputCertificate("second factor certificate does not verify");

  SumCertifyResult res;
  res.diagram = connected_sum(da, db);

  BigInt expected =
      determinant_goeritz(da) * determinant_goeritz(db);
  if (determinant_goeritz(res.diagram) != expected)
    throw std::logic_error("connected sum determinant is not multiplicative");

  SearchCtx ctx;
  ctx.budget = budget;
  std::unique_ptr<QACertificate> cert;
  Guide guide{&ca, determinant_goeritz(db), &cb};
  Outcome o = search(res.diagram, ctx, cert, &guide);
  long long used = ctx.expansions;
  if (o != Outcome::Certified) {
    SearchCtx plain;
    plain.budget = budget;
    cert.reset();
    o = search(res.diagram, plain, cert, nullptr);
    used += plain.expansions;
  }
  res.result = outcome_to_result(o, res.diagram, std::move(cert), used);
  return res;
}

}  // namespace qacert
