from __future__ import annotations

import pytest

from plaggraph.concept import ConceptLexicon, ConceptSet, extract_concepts, load_lexicon, parse_lexicon
from plaggraph.exceptions import LexiconCycleError, LexiconParseError
from plaggraph.preprocess import Sentence


def sentence(*stems):
    return Sentence(index=0, raw_text=' '.join(stems), terms=stems, stems=stems)


def test_no_file_is_pass_through():
    lexicon = load_lexicon()
    assert len(lexicon) == 0
    assert extract_concepts(sentence("cat", "sat", "cat"), lexicon) == {"cat", "sat"}


def test_load_lexicon_tab_separated(tmp_path):
    path = tmp_path / "lexicon.tsv"
    path.write_text("# synonyms\nautomobile\tcar\n\n", encoding="utf-8")
    lexicon = load_lexicon(str(path))
    assert lexicon.concept("automobile") == "car"
    assert lexicon.concept("car") == "car"
    assert lexicon.concept("bicycle") == "bicycle"


def test_load_lexicon_stemmed_entries(tmp_path):
    path = tmp_path / "lexicon.tsv"
    path.write_text("automobiles\tcars\n", encoding="utf-8")
    lexicon = load_lexicon(str(path), stem_entries=True)
    assert lexicon.concept("automobil") == "car"


def test_parse_lexicon_reports_line_number():
    with pytest.raises(LexiconParseError) as exc_info:
        parse_lexicon(["automobile\tcar", "broken line"], path="lex.tsv")
    assert exc_info.value.line_number == 2
    assert "lex.tsv:2" in str(exc_info.value)


@pytest.mark.parametrize("line", ["a\tb\tc", "\tcar", "car\t "])
def test_parse_lexicon_malformed(line):
    with pytest.raises(LexiconParseError):
        parse_lexicon([line])


def test_parse_lexicon_conflicting_variant():
    with pytest.raises(LexiconParseError):
        parse_lexicon(["auto\tcar", "auto\tvehicle"])


def test_parse_lexicon_cycle():
    with pytest.raises(LexiconCycleError):
        parse_lexicon(["a\tb", "b\tc"])


def test_canonical_label_may_map_to_itself():
    lexicon = parse_lexicon(["car\tcar", "auto\tcar"])
    assert lexicon.concept("auto") == "car"


def test_synonyms_collapse():
    lexicon = ConceptLexicon({"automobil": "car"})
    assert extract_concepts(sentence("automobil", "car"), lexicon) == {"car"}


def test_empty_sentence_has_no_concepts():
    assert extract_concepts(sentence(), ConceptLexicon()) == set()


def test_concept_set_iterates_sorted():
    concepts = ConceptSet(["pear", "apple", "fig"])
    assert list(concepts) == ["apple", "fig", "pear"]
    assert repr(concepts) == "ConceptSet(['apple', 'fig', 'pear'])"


def test_adding_synonyms_never_grows_concept_sets():
    stems = ("auto", "car", "vehicl", "road", "car")
    before = extract_concepts(sentence(*stems), ConceptLexicon())
    after = extract_concepts(sentence(*stems), ConceptLexicon({"auto": "car", "vehicl": "car"}))
    assert len(after) <= len(before) <= len(stems)
    assert after == {"car", "road"}
