#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace virality {

enum class Emotion { positive, negative, neutral, unknown };

std::string_view to_string(Emotion emotion) noexcept;

struct Story {
  std::string id;
  std::string title;
  std::string snippet;
  std::int64_t digg_count = 0;

  bool operator==(const Story&) const = default;
};

struct Comment {
  std::string id;
  std::string story_id;
  std::string user_id;
  std::optional<std::string> parent_id;  // absent for top-level comments
  std::int64_t diggs_up = 0;
  std::int64_t diggs_down = 0;
  Emotion emotion = Emotion::unknown;

  bool operator==(const Comment&) const = default;
};

// Stories and comments plus a story_id -> comment index. Immutable once
// built; safe to share read-only across threads.
class Corpus {
 public:
  Corpus() = default;

  // Indexes the records without any validation. Use load_corpus() for
  // checked ingestion and validate_corpus() to audit a hand-built corpus.
  static Corpus assemble(std::vector<Story> stories,
                         std::vector<Comment> comments);

  const std::vector<Story>& stories() const noexcept { return stories_; }
  const std::vector<Comment>& comments() const noexcept { return comments_; }

  const Story* find_story(std::string_view id) const;
  const Comment* find_comment(std::string_view id) const;

  // Positions in comments() of the story's comments, in file order. Empty
  // for a story without comments or an unknown id.
  std::span<const std::size_t> comments_of(std::string_view story_id) const;

 private:
  std::vector<Story> stories_;
  std::vector<Comment> comments_;
  std::unordered_map<std::string, std::size_t> story_index_;
  std::unordered_map<std::string, std::size_t> comment_index_;
  std::unordered_map<std::string, std::vector<std::size_t>> by_story_;
};

// Checked ingestion of the line-delimited JSON files. Blank lines are
// skipped. Throws ParseError, DuplicateIdError or ReferenceError.
Corpus load_corpus(const std::filesystem::path& stories_path,
                   const std::filesystem::path& comments_path);
Corpus read_corpus(std::istream& stories, std::istream& comments,
                   std::string_view stories_name = "stories",
                   std::string_view comments_name = "comments");

void write_stories(const Corpus& corpus, std::ostream& out);
void write_comments(const Corpus& corpus, std::ostream& out);
void write_corpus(const Corpus& corpus,
                  const std::filesystem::path& stories_path,
                  const std::filesystem::path& comments_path);

struct ValidationCheck {
  std::string name;
  std::size_t violations = 0;
  std::vector<std::string> offending_ids;
};

struct ValidationReport {
  ValidationCheck uniqueness{"uniqueness", 0, {}};
  ValidationCheck referential_integrity{"referential_integrity", 0, {}};
  ValidationCheck acyclicity{"acyclicity", 0, {}};
  ValidationCheck nonnegative_votes{"nonnegative_votes", 0, {}};

  bool clean() const noexcept {
    return uniqueness.violations == 0 &&
           referential_integrity.violations == 0 &&
           acyclicity.violations == 0 && nonnegative_votes.violations == 0;
  }
};

// Never throws on bad data; every problem is reported.
ValidationReport validate_corpus(const Corpus& corpus);

}  // namespace virality
