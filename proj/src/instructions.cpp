#include <map>

#include "lexeval/curation.hpp"
#include "lexeval/errors.hpp"

namespace lexeval {

namespace {

constexpr std::string_view kEnhancerBody =
    "Above is the simple caption of an image with text. Please deduce the detailed description of the "
    "image based on this simple caption. Note:\n"
    "1.The description should only include visual elements and should not contain any extended meanings.\n"
    "2.The visual elements should be as rich as possible, such as the main objects in the image, their "
    "respective attributes, the spatial relationships between the objects, lighting and shadows, color "
    "style, any text in the image and its style, etc.\n"
    "3.The output description should be a single paragraph and should not be structured.\n"
    "4.The description should avoid certain situations, such as pure white or black backgrounds, blurry "
    "text, excessive rendering of text, or harsh visual styles.\n"
    "5.The detailed caption should be human-readable and fluent.\n"
    "6.Avoid using vague expressions such as \"may be\" or \"might be\"; the generated caption must be in a "
    "definitive, narrative tone.\n"
    "7.Do not use negative sentence structures, such as \"there is nothing in the image,\" etc. The entire "
    "caption should directly describe the content of the image.\n"
    "8.The entire output should be limited to 200 words.\n";

constexpr std::string_view kRecaptionBody =
    "Instruction: This is the caption of an image with text rendered on and the corresponding image. "
    "There might be some artifacts in the image. For example, some of the texts were not be rendered "
    "correctly in the generated image. I need you to refer to the provided caption and corresponding "
    "generated image, refine the caption based on the generated image. Note:\n"
    "1.The refined caption should fully describe the generated image.\n"
    "2.In the refinded caption, the misalignment of the original caption and the generated image should "
    "be fixed and the other visual details should be keeped.\n"
    "3.Directly output the refined caption.\n"
    "4.The output description should be a single paragraph and should not be structured.\n"
    "5.The entire output should be limited to 200 words.\n";

constexpr std::string_view kRefinementBody =
    "Below is the caption of an image along with the text I provided. Please revise this caption, "
    "ensuring that the revised caption does not include the text I provided while maintaining the "
    "original meaning as much as possible. Note:\n"
    "1.The refined caption should be kept brief and concise, and it should describe an image containing "
    "no text.\n"
    "2.Directly give me the refined caption.\n"
    "3.Maybe the refined caption could start with \"An image of...\" or \"A picture of...\".\n"
    "4.Remember the provided text must not be included in the refined caption.\n"
    "5.The refined caption should be fluent.\n"
    "6.Most importantly: the refined caption must not contain any text to be rendered on the image.\n";

const std::string& slot(const Slots& slots, std::string_view name, InstructionKind kind) {
  const auto it = slots.find(name);
  if (it == slots.end()) {
    throw DataError("instruction template '" + std::string(to_string(kind)) + "' is missing slot '" +
                    std::string(name) + "'");
  }
  return it->second;
}

}  // namespace

std::string_view to_string(InstructionKind kind) {
  switch (kind) {
    case InstructionKind::Enhancer: return "enhancer";
    case InstructionKind::Recaption: return "recaption";
    case InstructionKind::Refinement: return "refinement";
  }
  return "enhancer";
}

std::optional<InstructionKind> parse_instruction_kind(std::string_view name) {
  if (name == "enhancer") return InstructionKind::Enhancer;
  if (name == "recaption") return InstructionKind::Recaption;
  if (name == "refinement") return InstructionKind::Refinement;
  return std::nullopt;
}

std::vector<std::string_view> required_slots(InstructionKind kind) {
  switch (kind) {
    case InstructionKind::Enhancer: return {"simple_caption"};
    case InstructionKind::Recaption: return {"image", "original_caption"};
    case InstructionKind::Refinement: return {"simple_caption", "ocr_results"};
  }
  return {};
}

std::string render_instruction(InstructionKind kind, const Slots& slots) {
  for (auto name : required_slots(kind)) slot(slots, name, kind);

  std::string out;
  switch (kind) {
    case InstructionKind::Enhancer:
      out += "Simple Caption: ";
      out += slot(slots, "simple_caption", kind);
      out += "\n\n";
      out += kEnhancerBody;
      break;
    case InstructionKind::Recaption:
      out += "Image: ";
      out += slot(slots, "image", kind);
      out += "\nOriginal Caption: ";
      out += slot(slots, "original_caption", kind);
      out += "\n";
      out += kRecaptionBody;
      break;
    case InstructionKind::Refinement:
      out += kRefinementBody;
      out += "\nSimple Caption: ";
      out += slot(slots, "simple_caption", kind);
      out += "\n\nText: ";
      out += slot(slots, "ocr_results", kind);
      out += "\n";
      break;
  }
  return out;
}

std::string format_quoted_list(std::span<const std::string> texts) {
  std::string out;
  for (std::size_t i = 0; i < texts.size(); ++i) {
    if (i > 0) out += ", ";
    out += '"';
    out += texts[i];
    out += '"';
  }
  return out;
}

void write_llm_requests(const std::filesystem::path& path, std::span<const LlmRequest> requests) {
  std::vector<Json> records;
  records.reserve(requests.size());
  for (const auto& r : requests) {
    Json j = {{"request_id", r.request_id}, {"kind", to_string(r.kind)}, {"instruction", r.instruction}};
    if (r.image) j["image"] = *r.image;
    records.push_back(std::move(j));
  }
  write_jsonl_atomic(path, records);
}

std::vector<LlmRequest> read_llm_requests(const std::filesystem::path& path) {
  std::vector<LlmRequest> out;
  for_each_jsonl(path, [&](std::size_t line, const Json& r) {
    const std::string ctx = path.filename().string() + " line " + std::to_string(line);
    LlmRequest req;
    req.request_id = require_string(r, "request_id", ctx);
    const std::string kind = require_string(r, "kind", ctx);
    const auto parsed = parse_instruction_kind(kind);
    if (!parsed) throw DataError(ctx + ": unknown instruction kind '" + kind + "'");
    req.kind = *parsed;
    req.instruction = require_string(r, "instruction", ctx);
    if (const auto it = r.find("image"); it != r.end() && it->is_string()) req.image = it->get<std::string>();
    out.push_back(std::move(req));
  });
  return out;
}

std::map<std::string, std::string> read_llm_responses(const std::filesystem::path& path) {
  std::map<std::string, std::string> out;
  for_each_jsonl(path, [&](std::size_t line, const Json& r) {
    const std::string ctx = path.filename().string() + " line " + std::to_string(line);
    std::string id = require_string(r, "request_id", ctx);
    if (!out.emplace(id, require_string(r, "response", ctx)).second) {
      throw DataError(ctx + ": duplicate response for request '" + id + "'");
    }
  });
  return out;
}

}  // namespace lexeval
