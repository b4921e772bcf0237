#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "fusioninv/classify.hpp"
#include "fusioninv/invariants.hpp"
#include "fusioninv/lattice.hpp"
#include "fusioninv/ring.hpp"
#include "fusioninv/symbols.hpp"

namespace fusioninv::io {

using Json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

/// Whole-file read; throws ParseError naming the path when it cannot be opened.
std::string read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, std::string_view contents);

/// Pretty-printed with a trailing newline.
std::string dump(const Json& j);

BasedRing load_ring(const std::filesystem::path& path);
Json to_json(const BasedRing& ring);

Json phi_to_json(const BasedRing& ring, const PhiIndex& p);
PhiIndex phi_from_json(const BasedRing& ring, const Json& j);

/// Every admissible index must appear exactly once; throws ParseError otherwise.
Solution parse_solution(const SystemPtr& system, std::string_view text);
Solution load_solution(const SystemPtr& system, const std::filesystem::path& path);
Json to_json(const Solution& sol, unsigned digits = 0);

/// {"ring": ..., "zeros": [{a..f}, ...]}
ZeroSet parse_zero_set(const FusionSystem& system, std::string_view text);
Json to_json(const FusionSystem& system, const ZeroSet& zeros);

/// {"ring", "zeros", "monomials": [{"exponents": [{a..f, k}]}]}
InvariantBasis parse_basis(const SystemPtr& system, std::string_view text);
Json to_json(const InvariantBasis& basis);

Json to_json(const FusionSystem& system, const VerificationReport& report);
Json to_json(const EvaluationRecord& record, unsigned digits = 0);
Json to_json(const RationalityVerdict& verdict);
Json to_json(const FusionSystem& system, const ZeroSetOrbit& orbit);
Json to_json(const FusionSystem& system, const std::vector<LocalizedEquation>& equations);
Json to_json(const FusionSystem& system, const ClassificationReport& report);
Json to_json(const BasedRing& ring, const RingReport& report);

/// Human-readable class tables: id, members, zero-set id, invariant digest, witness.
std::string classification_table(const FusionSystem& system, const ClassificationReport& report);

/// Short stable digest of an evaluation vector rounded to `digits` significant digits.
std::string evaluation_digest(const EvaluationRecord& record, unsigned digits = 12);

/// Tab-separated matrix dump with row and column labels in header comments.
std::string matrix_tsv(const FusionSystem& system, const ExponentMatrix& m);

}  // namespace fusioninv::io
