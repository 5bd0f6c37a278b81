from lamlat import AcuteClause, build_report
from lamlat.fixtures import FIXTURE_NAMES, fixture
from lamlat.report import ReportDocument


def test_report_fields_fig2():
    doc = build_report("FIG2", fixture("FIG2"))
    assert doc.n == 7
    assert doc.axioms.all_pass
    assert doc.properties.row() == (False, True, True)
    assert doc.heights == (0, 1, 1, 1, 2, 2, 3)
    assert doc.chain_summary.count_from_bottom == 5
    assert doc.chain_summary.lengths_from_bottom == (3,)
    assert doc.chain_summary.equal_length_from_every_element
    assert doc.acute.clause is AcuteClause.FAILS


def test_report_fig5_chain_summary():
    doc = build_report("FIG5", fixture("FIG5"))
    assert doc.chain_summary.lengths_from_bottom == (3, 4)
    assert not doc.chain_summary.equal_length_from_every_element


def test_roundtrip_every_fixture():
    for name in FIXTURE_NAMES:
        doc = build_report(name, fixture(name))
        assert ReportDocument.from_dict(doc.to_dict()) == doc


def test_dict_encoding_is_json_friendly():
    import json

    doc = build_report("FIG3", fixture("FIG3"))
    blob = json.dumps(doc.to_dict(), sort_keys=True)
    assert ReportDocument.from_dict(json.loads(blob)) == doc
