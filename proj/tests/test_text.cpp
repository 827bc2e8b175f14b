#include <doctest.h>

#include "ctxpass/errors.hpp"
#include "ctxpass/text.hpp"
#include "test_support.hpp"

using namespace ctxpass;

TEST_SUITE("text") {

TEST_CASE("ascii class helpers") {
  CHECK(is_ascii_lower('a'));
  CHECK(is_ascii_lower('z'));
  CHECK_FALSE(is_ascii_lower('A'));
  CHECK_FALSE(is_ascii_lower('0'));
  CHECK(is_ascii_upper('Q'));
  CHECK_FALSE(is_ascii_upper('q'));
  CHECK(is_ascii_digit('0'));
  CHECK(is_ascii_digit('9'));
  CHECK_FALSE(is_ascii_digit('/'));
  CHECK_FALSE(is_ascii_digit(':'));
  CHECK(ascii_tolower('G') == 'g');
  CHECK(ascii_tolower('g') == 'g');
  CHECK(ascii_tolower('@') == '@');
  CHECK(ascii_toupper('g') == 'G');
  CHECK(ascii_toupper('4') == '4');
}

TEST_CASE("case conversion leaves non-letters alone") {
  CHECK(to_lower_ascii("Orange23!") == "orange23!");
  CHECK(to_upper_ascii("Orange23!") == "ORANGE23!");
  CHECK(capitalize_ascii("orange") == "Orange");
  CHECK(capitalize_ascii("ANN") == "Ann");
  CHECK(capitalize_ascii("") == "");
  CHECK(capitalize_ascii("9lives") == "9lives");
}

TEST_CASE("trim strips control bytes and spaces") {
  CHECK(trim("  hi  ") == "hi");
  CHECK(trim("\t\r\nhi\r\n") == "hi");
  CHECK(trim("hi") == "hi");
  CHECK(trim("   ") == "");
  CHECK(trim("") == "");
}

TEST_CASE("fold_to_ascii lowercases and strips accents") {
  CHECK(fold_to_ascii("George") == "george");
  CHECK(fold_to_ascii("Müller") == "muller");
  CHECK(fold_to_ascii("José") == "jose");
  CHECK(fold_to_ascii("naïve") == "naive");
  CHECK(fold_to_ascii("straße") == "strasse");
  CHECK(fold_to_ascii("Ærø") == "aero");
  CHECK(fold_to_ascii("Þor") == "thor");
  CHECK(fold_to_ascii("Œuvre") == "oeuvre");
  CHECK(fold_to_ascii("Ĳsselmeer") == "ijsselmeer");
  CHECK(fold_to_ascii("Čech") == "cech");
  CHECK(fold_to_ascii("Łódź") == "lodz");
}

TEST_CASE("fold_to_ascii maps everything else to a boundary space") {
  CHECK(fold_to_ascii("3×4") == "3 4");
  CHECK(fold_to_ascii("a÷b") == "a b");
  CHECK(fold_to_ascii("Ivan Иванов") == "ivan       ");
  CHECK(fold_to_ascii("日本") == "  ");
  CHECK(fold_to_ascii("\xff\xfe") == "  ");
  CHECK(fold_to_ascii("a\xc3") == "a ");
}

TEST_CASE("alpha_runs splits folded text on non-letters") {
  CHECK(alpha_runs("orange, california", 3) ==
        std::vector<std::string>{"orange", "california"});
  CHECK(alpha_runs("al b cd efg", 3) == std::vector<std::string>{"efg"});
  CHECK(alpha_runs("", 3).empty());
  CHECK(alpha_runs("abc", 4).empty());
  CHECK(alpha_runs("abcd", 4) == std::vector<std::string>{"abcd"});
}

TEST_CASE("digit_runs keeps runs meeting the minimum length") {
  CHECK(digit_runs("born 1994, flat 7, code 23", 2) ==
        std::vector<std::string>{"1994", "23"});
  CHECK(digit_runs("a1b2c3", 2).empty());
  CHECK(digit_runs("007", 2) == std::vector<std::string>{"007"});
}

TEST_CASE("split_lines handles LF, CRLF, and missing terminators") {
  CHECK(split_lines("a\nb\nc") == std::vector<std::string>{"a", "b", "c"});
  CHECK(split_lines("a\nb\n") == std::vector<std::string>{"a", "b"});
  CHECK(split_lines("a\r\nb\r\n") == std::vector<std::string>{"a", "b"});
  CHECK(split_lines("a\n\nb") == std::vector<std::string>{"a", "", "b"});
  CHECK(split_lines("\n") == std::vector<std::string>{""});
  CHECK(split_lines("").empty());
}

TEST_CASE("fnv1a64 matches the reference vectors") {
  CHECK(fnv1a64("") == 0xcbf29ce484222325ULL);
  CHECK(fnv1a64("a") == 0xaf63dc4c8601ec8cULL);
  CHECK(fnv1a64("foobar") == 0x85944171f73967e8ULL);
}

TEST_CASE("hex64 renders 16 lowercase digits") {
  CHECK(hex64(0) == "0000000000000000");
  CHECK(hex64(0xdeadbeefULL) == "00000000deadbeef");
  CHECK(hex64(0xcbf29ce484222325ULL) == "cbf29ce484222325");
}

TEST_CASE("file round trip and missing-file errors") {
  testutil::TempDir dir;
  std::string path = dir.file("blob.txt");
  write_file(path, "line1\nline2\n");
  CHECK(read_file(path) == "line1\nline2\n");
  CHECK_THROWS_AS(read_file(dir.file("absent.txt")), DataError);
}

}  // TEST_SUITE
