#pragma once

// File formats: machines (.atm.json), knowledge bases (.kb.dl, .kb.ofn),
// queries (.cq) and interpretations (.interp.json). All emitters are
// canonical, so equal values always produce identical bytes.

#include <string>
#include <vector>

#include "selfcq/atm.hpp"
#include "selfcq/cq.hpp"
#include "selfcq/dl.hpp"

namespace selfcq {

struct ParsedAtm {
    Atm atm;
    std::vector<std::string> warnings;  // e.g. duplicate transitions dropped
};

/// Throws ParseError for malformed JSON or schema violations and
/// AtmValidationError when the machine breaks the normal form.
ParsedAtm parse_atm_with_warnings(const std::string& text);
Atm parse_atm(const std::string& text);
std::string emit_atm(const Atm& atm);

/// 16 hex digits of FNV-1a (64 bit) over emit_atm(atm).
std::string atm_fingerprint(const Atm& atm);

enum class KbFormat { dltext, owlfs };

std::string emit_kb(const KnowledgeBase& kb, KbFormat format = KbFormat::dltext);
/// Only dltext can be read back; owlfs is export-only.
KnowledgeBase parse_kb(const std::string& text, KbFormat format = KbFormat::dltext);

Concept parse_concept(const std::string& text);

std::string emit_cq(const Cq& q);
Cq parse_cq(const std::string& text);

std::string emit_interp(const Interpretation& interp);
Interpretation parse_interp(const std::string& text);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

}  // namespace selfcq
