#pragma once

#include <memory>
#include <string>
#include <vector>

#include "qacert/bigint.hpp"
#include "qacert/diagram.hpp"

namespace qacert {

// Proof tree for quasi-alternating certification. A leaf records a
// crossing-removing Reidemeister reduction of its diagram to the trivial
// one; a branch records a crossing whose two smoothings have determinants
// that are positive and sum to the determinant of the diagram, together
// with subtrees for both smoothings.
struct QACertificate {
  enum class Kind { Leaf, Branch };
  Kind kind = Kind::Leaf;
  // leaf payload
  std::vector<SimplifyMove> trace;
  // branch payload
  std::string key;
  int crossing = -1;
  long long det = 0;
  long long det0 = 0;
  long long det_inf = 0;
  std::unique_ptr<QACertificate> zero;
  std::unique_ptr<QACertificate> inf;
};

enum class QAStatus { Certified, NotQA, Unknown };

struct CertifyResult {
  QAStatus status = QAStatus::Unknown;
  std::unique_ptr<QACertificate> certificate;  // set when Certified
  std::string reason;                          // set otherwise
  long long expansions = 0;
};

// Bounded proof search. Certified and NotQA answers are definitive (the
// latter only for determinant zero); everything else is Unknown.
CertifyResult certify(const LinkDiagram& d, long long budget = 100000);

// Recomputes every claim in the certificate against the diagram. Returns
// false on any mismatch; never throws.
bool verify_certificate(const QACertificate& cert, const LinkDiagram& d);

std::string certificate_to_json(const QACertificate& cert);
std::unique_ptr<QACertificate> certificate_from_json(const std::string& text);

struct SumCertifyResult {
  LinkDiagram diagram;
  CertifyResult result;
};

// Certify the connected sum of two certified diagrams, steering the search
// with the input certificates (determinants scale by the other factor) and
// falling back to a plain search if the guided pass misses.
SumCertifyResult qa_connected_sum(const LinkDiagram& da,
                                  const QACertificate& ca,
                                  const LinkDiagram& db,
                                  const QACertificate& cb,
                                  long long budget = 100000);

}  // namespace qacert
