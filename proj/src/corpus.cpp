#include "virality/corpus.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <ostream>
#include <set>

#include "json.hpp"
#include "virality/error.hpp"

namespace virality {

using nlohmann::json;

std::string_view to_string(Emotion emotion) noexcept {
  switch (emotion) {
    case Emotion::positive: return "positive";
    case Emotion::negative: return "negative";
    case Emotion::neutral: return "neutral";
    case Emotion::unknown: return "unknown";
  }
  return "unknown";
}

Corpus Corpus::assemble(std::vector<Story> stories,
                        std::vector<Comment> comments) {
  Corpus c;
  c.stories_ = std::move(stories);
  c.comments_ = std::move(comments);
  c.story_index_.reserve(c.stories_.size());
  for (std::size_t i = 0; i < c.stories_.size(); ++i) {
    c.story_index_.try_emplace(c.stories_[i].id, i);
    c.by_story_.try_emplace(c.stories_[i].id);
  }
  c.comment_index_.reserve(c.comments_.size());
  for (std::size_t i = 0; i < c.comments_.size(); ++i) {
    c.comment_index_.try_emplace(c.comments_[i].id, i);
    c.by_story_[c.comments_[i].story_id].push_back(i);
  }
  return c;
}

const Story* Corpus::find_story(std::string_view id) const {
  const auto it = story_index_.find(std::string(id));
  return it == story_index_.end() ? nullptr : &stories_[it->second];
}

const Comment* Corpus::find_comment(std::string_view id) const {
  const auto it = comment_index_.find(std::string(id));
  return it == comment_index_.end() ? nullptr : &comments_[it->second];
}

std::span<const std::size_t> Corpus::comments_of(
    std::string_view story_id) const {
  const auto it = by_story_.find(std::string(story_id));
  if (it == by_story_.end()) return {};
  return it->second;
}

namespace {

class RecordReader {
 public:
  RecordReader(std::string_view source, std::size_t line, const json& record)
      : source_(source), line_(line), record_(record) {}

  [[noreturn]] void fail(const std::string& field,
                         const std::string& what) const {
    throw ParseError(std::string(source_), line_, field, what);
  }

  std::string string_field(const char* name, bool non_empty) const {
    const auto it = record_.find(name);
    if (it == record_.end()) fail(name, "missing");
    if (!it->is_string()) fail(name, "expected a string");
    std::string value = it->get<std::string>();
    if (non_empty && value.empty()) fail(name, "must be non-empty");
    return value;
  }

  std::optional<std::string> optional_string(const char* name) const {
    const auto it = record_.find(name);
    if (it == record_.end() || it->is_null()) return std::nullopt;
    if (!it->is_string()) fail(name, "expected a string or null");
    std::string value = it->get<std::string>();
    if (value.empty()) fail(name, "must be non-empty when present");
    return value;
  }

  std::int64_t count_field(const char* name) const {
    const auto it = record_.find(name);
    if (it == record_.end()) fail(name, "missing");
    if (!it->is_number_integer()) fail(name, "expected an integer");
    if (it->is_number_unsigned()) {
      const auto value = it->get<std::uint64_t>();
      if (value > static_cast<std::uint64_t>(INT64_MAX))
        fail(name, "out of range");
      return static_cast<std::int64_t>(value);
    }
    const auto value = it->get<std::int64_t>();
    if (value < 0) fail(name, "must be >= 0");
    return value;
  }

  Emotion emotion_field(const char* name) const {
    const auto it = record_.find(name);
    if (it == record_.end() || it->is_null()) return Emotion::unknown;
    if (!it->is_string()) fail(name, "expected a string or null");
    const auto& value = it->get_ref<const std::string&>();
    if (value == "positive") return Emotion::positive;
    if (value == "negative") return Emotion::negative;
    if (value == "neutral") return Emotion::neutral;
    if (value == "unknown") return Emotion::unknown;
    fail(name, "unknown emotion '" + value + "'");
  }

 private:
  std::string_view source_;
  std::size_t line_;
  const json& record_;
};

template <class Fn>
void for_each_record(std::istream& in, std::string_view source, Fn&& fn) {
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    json record = json::parse(line, nullptr, false);
    if (record.is_discarded())
      throw ParseError(std::string(source), line_no, "", "invalid JSON");
    if (!record.is_object())
      throw ParseError(std::string(source), line_no, "", "expected an object");
    fn(RecordReader(source, line_no, record));
  }
}

// Comments (by position) lying on a parent cycle, grouped per cycle.
std::vector<std::vector<std::size_t>> find_parent_cycles(const Corpus& c) {
  const auto& comments = c.comments();
  std::unordered_map<std::string, std::size_t> position;
  for (std::size_t i = 0; i < comments.size(); ++i)
    position.try_emplace(comments[i].id, i);

  // 0 = unvisited, otherwise the walk number that first reached the node.
  std::vector<std::size_t> stamp(comments.size(), 0);
  std::vector<std::vector<std::size_t>> cycles;
  std::vector<std::size_t> path;
  for (std::size_t start = 0; start < comments.size(); ++start) {
    if (stamp[start] != 0) continue;
    const std::size_t walk = start + 1;
    path.clear();
    std::size_t node = start;
    for (;;) {
      if (stamp[node] != 0) {
        if (stamp[node] == walk) {
          auto first = std::find(path.begin(), path.end(), node);
          cycles.emplace_back(first, path.end());
        }
        break;
      }
      stamp[node] = walk;
      path.push_back(node);
      const auto& parent = comments[node].parent_id;
      if (!parent) break;
      const auto it = position.find(*parent);
      if (it == position.end()) break;
      node = it->second;
    }
  }
  return cycles;
}

}  // namespace

Corpus read_corpus(std::istream& stories_in, std::istream& comments_in,
                   std::string_view stories_name,
                   std::string_view comments_name) {
  std::vector<Story> stories;
  for_each_record(stories_in, stories_name, [&](const RecordReader& r) {
    Story s;
    s.id = r.string_field("id", true);
    s.title = r.string_field("title", false);
    s.snippet = r.string_field("snippet", false);
    s.digg_count = r.count_field("diggs");
    stories.push_back(std::move(s));
  });

  std::vector<Comment> comments;
  for_each_record(comments_in, comments_name, [&](const RecordReader& r) {
    Comment c;
    c.id = r.string_field("id", true);
    c.story_id = r.string_field("story_id", true);
    c.user_id = r.string_field("user_id", false);
    c.parent_id = r.optional_string("parent_id");
    c.diggs_up = r.count_field("diggs_up");
    c.diggs_down = r.count_field("diggs_down");
    c.emotion = r.emotion_field("emotion");
    comments.push_back(std::move(c));
  });

  std::set<std::string_view> seen;
  for (const auto& s : stories)
    if (!seen.insert(s.id).second) throw DuplicateIdError(s.id);
  seen.clear();
  for (const auto& c : comments)
    if (!seen.insert(c.id).second) throw DuplicateIdError(c.id);

  Corpus corpus = Corpus::assemble(std::move(stories), std::move(comments));
  for (const auto& c : corpus.comments()) {
    if (corpus.find_story(c.story_id) == nullptr)
      throw ReferenceError(c.id, "comment '" + c.id +
                                     "' references unknown story '" +
                                     c.story_id + "'");
    if (!c.parent_id) continue;
    const Comment* parent = corpus.find_comment(*c.parent_id);
    if (parent == nullptr)
      throw ReferenceError(c.id, "comment '" + c.id +
                                     "' has dangling parent_id '" +
                                     *c.parent_id + "'");
    if (parent->story_id != c.story_id)
      throw ReferenceError(c.id, "comment '" + c.id + "' replies to comment '" +
                                     parent->id + "' of a different story");
  }
  if (const auto cycles = find_parent_cycles(corpus); !cycles.empty()) {
    const auto& id = corpus.comments()[cycles.front().front()].id;
    throw ReferenceError(id, "comment '" + id + "' lies on a parent cycle");
  }
  return corpus;
}

Corpus load_corpus(const std::filesystem::path& stories_path,
                   const std::filesystem::path& comments_path) {
  std::ifstream stories(stories_path);
  if (!stories)
    throw ParseError(stories_path.string(), 0, "", "cannot open file");
  std::ifstream comments(comments_path);
  if (!comments)
    throw ParseError(comments_path.string(), 0, "", "cannot open file");
  return read_corpus(stories, comments, stories_path.string(),
                     comments_path.string());
}

void write_stories(const Corpus& corpus, std::ostream& out) {
  for (const auto& s : corpus.stories()) {
    nlohmann::ordered_json record;
    record["id"] = s.id;
    record["title"] = s.title;
    record["snippet"] = s.snippet;
    record["diggs"] = s.digg_count;
    out << record.dump() << '\n';
  }
}

void write_comments(const Corpus& corpus, std::ostream& out) {
  for (const auto& c : corpus.comments()) {
    nlohmann::ordered_json record;
    record["id"] = c.id;
    record["story_id"] = c.story_id;
    record["user_id"] = c.user_id;
    record["parent_id"] = c.parent_id ? json(*c.parent_id) : json(nullptr);
    record["diggs_up"] = c.diggs_up;
    record["diggs_down"] = c.diggs_down;
    record["emotion"] = c.emotion == Emotion::unknown
                            ? json(nullptr)
                            : json(std::string(to_string(c.emotion)));
    out << record.dump() << '\n';
  }
}

void write_corpus(const Corpus& corpus,
                  const std::filesystem::path& stories_path,
                  const std::filesystem::path& comments_path) {
  std::ofstream stories(stories_path, std::ios::binary);
  std::ofstream comments(comments_path, std::ios::binary);
  if (!stories || !comments)
    throw Error("cannot open corpus output files for writing");
  write_stories(corpus, stories);
  write_comments(corpus, comments);
}

ValidationReport validate_corpus(const Corpus& corpus) {
  ValidationReport report;
  auto flag = [](ValidationCheck& check, const std::string& id) {
    ++check.violations;
    check.offending_ids.push_back(id);
  };

  std::set<std::string_view> seen;
  for (const auto& s : corpus.stories()) {
    if (s.id.empty() || !seen.insert(s.id).second)
      flag(report.uniqueness, s.id);
    if (s.digg_count < 0) flag(report.nonnegative_votes, s.id);
  }
  seen.clear();
  for (const auto& c : corpus.comments()) {
    if (c.id.empty() || !seen.insert(c.id).second)
      flag(report.uniqueness, c.id);
    if (c.diggs_up < 0 || c.diggs_down < 0)
      flag(report.nonnegative_votes, c.id);

    bool broken = corpus.find_story(c.story_id) == nullptr;
    if (c.parent_id) {
      const Comment* parent = corpus.find_comment(*c.parent_id);
      broken = broken || parent == nullptr || parent->story_id != c.story_id;
    }
    if (broken) flag(report.referential_integrity, c.id);
  }

  for (const auto& cycle : find_parent_cycles(corpus)) {
    ++report.acyclicity.violations;
    for (const std::size_t i : cycle)
      report.acyclicity.offending_ids.push_back(corpus.comments()[i].id);
  }
  return report;
}

}  // namespace virality
