#!/usr/bin/env python3
"""Regenerate the bundled benchmark scenarios.

Every scenario is checked for expressibility: the grammar must contain at
least one program consistent with the full row set, otherwise no variant
could ever converge on it.
"""

import json
import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parents[1] / "src"))

from activefill.learner import count_programs, learn  # noqa: E402

OUT = Path(__file__).resolve().parents[1] / "src" / "activefill" / "suite"


def scenario(name, rows):
    inputs = [r[0] for r in rows]
    outputs = [r[1] for r in rows]
    return {"name": name, "inputs": inputs, "outputs": outputs}


SCENARIOS = [
    # --- product identifiers -------------------------------------------------
    scenario("pid-uniform", [
        ("12 units PID 24122 Laptop", "PID 24122"),
        ("43 units PID 98311 Keyboard", "PID 98311"),
        ("7 units PID 21312 Memory", "PID 21312"),
        ("22 units PID 23342 Dock", "PID 23342"),
        ("2 units PID 24232 Mouse", "PID 24232"),
        ("150 units PID 32465 Ink", "PID 32465"),
    ]),
    scenario("pid-names-with-caps", [
        ("12 units PID 24122 Laptop Pro", "PID 24122"),
        ("43 units PID 98311 Wireless Keyboard", "PID 98311"),
        ("7 units PID 21312 Memory Card", "PID 21312"),
        ("22 units PID 23342 Docking Station", "PID 23342"),
        ("2 units PID 24232 Mouse Pad", "PID 24232"),
        ("150 units PID 32465 Printer Ink", "PID 32465"),
        ("9 units PID 77120 Usb Hub", "PID 77120"),
    ]),
    scenario("pid-number-only", [
        ("12 units PID 24122 Laptop", "24122"),
        ("43 units PID 98311 Keyboard", "98311"),
        ("7 units PID 21312 Memory", "21312"),
        ("22 units PID 23342 Dock", "23342"),
        ("2 units PID 24232 Mouse", "24232"),
        ("150 units PID 32465 Ink", "32465"),
        ("31 units PID 90210 Cable", "90210"),
        ("5 units PID 11222 Stand", "11222"),
    ]),
    scenario("pid-versioned-names", [
        ("12 units PID 24122 Laptop", "24122"),
        ("43 units PID 98311 Keyboard v2", "98311"),
        ("7 units PID 21312 Memory", "21312"),
        ("22 units PID 23342 Dock v3", "23342"),
        ("2 units PID 24232 Mouse", "24232"),
        ("150 units PID 32465 Ink v10", "32465"),
    ]),
    scenario("pid-hyphenated", [
        ("12 units PID 24122-B Laptop", "PID 24122-B"),
        ("43 units PID 98311-A Keyboard", "PID 98311-A"),
        ("7 units PID 21312-C Memory", "PID 21312-C"),
        ("22 units PID 23342-D Dock", "PID 23342-D"),
        ("2 units PID 24232-E Mouse", "PID 24232-E"),
        ("150 units PID 32465-X Ink", "PID 32465-X"),
    ]),
    scenario("sku-after-colon", [
        ("qty 4 sku: 8821 shelf A", "8821"),
        ("qty 18 sku: 1020 shelf B", "1020"),
        ("qty 7 sku: 33417 shelf C", "33417"),
        ("qty 200 sku: 5500 shelf D", "5500"),
        ("qty 31 sku: 904 shelf E", "904"),
        ("qty 2 sku: 77 shelf F", "77"),
    ]),
    scenario("order-count", [
        ("order 4411 box of 12", "12"),
        ("order 8802 box of 6", "6"),
        ("order 1234 box of 144", "144"),
        ("order 9113 box of 24", "24"),
        ("order 5550 box of 36", "36"),
        ("order 3030 box of 8", "8"),
    ]),
    scenario("inventory-tail-word", [
        ("12 units PID 24122 Laptop", "Laptop"),
        ("43 units PID 98311 Keyboard", "Keyboard"),
        ("7 units PID 21312 Memory", "Memory"),
        ("22 units PID 23342 Dock", "Dock"),
        ("2 units PID 24232 Mouse", "Mouse"),
        ("150 units PID 32465 Ink", "Ink"),
    ]),
    # --- unit stripping ------------------------------------------------------
    scenario("units-strip-mixed", [
        ("12 in", "12"),
        ("8 in", "8"),
        ("30 cm", "30"),
        ("25 cm", "25"),
        ("7 mm", "7"),
        ("100 in", "100"),
        ("64 mm", "64"),
    ]),
    scenario("units-keep-unit", [
        ("12 in", "in"),
        ("8 in", "in"),
        ("30 cm", "cm"),
        ("25 cm", "cm"),
        ("7 mm", "mm"),
        ("100 in", "in"),
    ]),
    scenario("units-labelled", [
        ("width: 12 in", "12"),
        ("width: 8 in", "8"),
        ("height: 30 cm", "30"),
        ("height: 25 cm", "25"),
        ("depth: 7 mm", "7"),
        ("depth: 100 in", "100"),
    ]),
    scenario("units-swap", [
        ("12 in", "in 12"),
        ("8 in", "in 8"),
        ("30 cm", "cm 30"),
        ("25 cm", "cm 25"),
        ("7 mm", "mm 7"),
        ("100 in", "in 100"),
    ]),
    scenario("weights-decimal", [
        ("2.5 kg net", "2.5"),
        ("6.25 kg net", "6.25"),
        ("3.25 kg net", "3.25"),
        ("11.5 kg net", "11.5"),
        ("7.75 kg net", "7.75"),
        ("19.5 kg net", "19.5"),
    ]),
    scenario("ranges-low", [
        ("10-20 pcs", "10"),
        ("5-8 pcs", "5"),
        ("100-200 pcs", "100"),
        ("32-64 pcs", "32"),
        ("7-9 pcs", "7"),
        ("55-60 pcs", "55"),
    ]),
    scenario("ranges-high", [
        ("10-20 pcs", "20"),
        ("5-8 pcs", "8"),
        ("100-200 pcs", "200"),
        ("32-64 pcs", "64"),
        ("7-9 pcs", "9"),
        ("55-60 pcs", "60"),
    ]),
    scenario("percent-values", [
        ("cpu 93% busy", "93"),
        ("cpu 5% busy", "5"),
        ("mem 47% busy", "47"),
        ("mem 100% busy", "100"),
        ("net 3% busy", "3"),
        ("disk 88% busy", "88"),
    ]),
    # --- dates ---------------------------------------------------------------
    scenario("dates-uniform-dmy", [
        ("05-Feb-2015", "2015"),
        ("17-Mar-2012", "2012"),
        ("01-Dec-2019", "2019"),
        ("23-Jul-2008", "2008"),
        ("30-Jan-2021", "2021"),
        ("11-Sep-2014", "2014"),
    ]),
    scenario("dates-mixed-formats", [
        ("05-Feb-2015", "2015"),
        ("25 December 2013", "2013"),
        ("12/5/2014", "2014"),
        ("9.3.2017", "2017"),
        ("18-Aug-2011", "2011"),
        ("30 April 2016", "2016"),
        ("7/21/2018", "2018"),
        ("2.28.2019", "2019"),
    ]),
    scenario("dates-month-name", [
        ("05-Feb-2015", "Feb"),
        ("17-Mar-2012", "Mar"),
        ("01-Dec-2019", "Dec"),
        ("23-Jul-2008", "Jul"),
        ("30-Jan-2021", "Jan"),
        ("11-Sep-2014", "Sep"),
    ]),
    scenario("dates-day-number", [
        ("05-Feb-2015", "05"),
        ("17-Mar-2012", "17"),
        ("01-Dec-2019", "01"),
        ("23-Jul-2008", "23"),
        ("30-Jan-2021", "30"),
        ("11-Sep-2014", "11"),
    ]),
    scenario("dates-iso-month", [
        ("2015-02-05", "02"),
        ("2012-03-17", "03"),
        ("2019-12-01", "12"),
        ("2008-07-23", "07"),
        ("2021-01-30", "01"),
        ("2014-09-11", "09"),
    ]),
    scenario("dates-compact-year", [
        ("20150205", "2015"),
        ("20120317", "2012"),
        ("20191201", "2019"),
        ("20080723", "2008"),
        ("20210130", "2021"),
        ("20140911", "2014"),
    ]),
    scenario("timestamps-hour", [
        ("03:15:22 up", "03"),
        ("11:02:59 up", "11"),
        ("23:44:01 up", "23"),
        ("07:30:30 up", "07"),
        ("19:05:44 up", "19"),
        ("12:12:12 up", "12"),
    ]),
    scenario("dates-year-plus-month", [
        ("05-Feb-2015", "2015 Feb"),
        ("17-Mar-2012", "2012 Mar"),
        ("01-Dec-2019", "2019 Dec"),
        ("23-Jul-2008", "2008 Jul"),
        ("30-Jan-2021", "2021 Jan"),
        ("11-Sep-2014", "2014 Sep"),
    ]),
    # --- phone numbers -------------------------------------------------------
    scenario("phones-area-paren", [
        ("(123) 456-7890", "123"),
        ("(425) 555-0199", "425"),
        ("(206) 555-0100", "206"),
        ("(917) 555-0123", "917"),
        ("(303) 555-0456", "303"),
        ("(608) 555-0789", "608"),
    ]),
    scenario("phones-area-mixed", [
        ("(123) 456-7890", "123"),
        ("425-555-0199", "425"),
        ("206 555 0100", "206"),
        ("917.555.0123", "917"),
        ("(303) 555-0456", "303"),
        ("608-555-0789", "608"),
        ("212 555 0345", "212"),
    ]),
    scenario("phones-exchange", [
        ("(123) 456-7890", "456"),
        ("(425) 515-0199", "515"),
        ("(206) 525-0100", "525"),
        ("(917) 535-0123", "535"),
        ("(303) 545-0456", "545"),
        ("(608) 555-0789", "555"),
    ]),
    scenario("phones-last-four", [
        ("(123) 456-7890", "7890"),
        ("425-555-0199", "0199"),
        ("206 555 0100", "0100"),
        ("917.555.0123", "0123"),
        ("(303) 555-0456", "0456"),
        ("608-555-0789", "0789"),
    ]),
    scenario("phones-dashed", [
        ("123-456-7890", "123-456-7890"),
        ("425-555-0199", "425-555-0199"),
        ("206-555-0100", "206-555-0100"),
        ("917-555-0123", "917-555-0123"),
        ("303-555-0456", "303-555-0456"),
        ("608-555-0789", "608-555-0789"),
    ]),
    # --- assorted extraction -------------------------------------------------
    scenario("emails-user", [
        ("alice@example.com", "alice"),
        ("bob@test.org", "bob"),
        ("carol@mail.net", "carol"),
        ("dave@site.io", "dave"),
        ("erin@web.dev", "erin"),
        ("frank@host.co", "frank"),
    ]),
    scenario("emails-domain", [
        ("alice@example.com", "example.com"),
        ("bob@test.org", "test.org"),
        ("carol@mail.net", "mail.net"),
        ("dave@site.io", "site.io"),
        ("erin@web.dev", "web.dev"),
        ("frank@host.co", "host.co"),
    ]),
    scenario("paths-extension", [
        ("report_2019.pdf", "pdf"),
        ("summary_2020.txt", "txt"),
        ("notes_2021.docx", "docx"),
        ("data_2018.csv", "csv"),
        ("image_2022.png", "png"),
        ("deck_2017.ppt", "ppt"),
    ]),
    scenario("logs-level", [
        ("ERROR 2024-01-03 disk full", "ERROR"),
        ("WARN 2024-01-04 fan slow", "WARN"),
        ("INFO 2024-01-05 started", "INFO"),
        ("ERROR 2024-02-11 net down", "ERROR"),
        ("DEBUG 2024-03-09 probe ok", "DEBUG"),
        ("INFO 2024-04-16 stopped", "INFO"),
    ]),
    scenario("money-amount", [
        ("$ 12.50 total", "12.50"),
        ("$ 7.25 total", "7.25"),
        ("$ 1299.99 total", "1299.99"),
        ("$ 3.00 total", "3.00"),
        ("$ 450.10 total", "450.10"),
        ("$ 88.88 total", "88.88"),
    ]),
]


def main() -> int:
    OUT.mkdir(parents=True, exist_ok=True)
    for old in OUT.glob("*.json"):
        old.unlink()
    names = set()
    for data in SCENARIOS:
        assert data["name"] not in names, f"duplicate name {data['name']}"
        names.add(data["name"])
        pairs = list(zip(data["inputs"], data["outputs"]))
        space = learn(pairs)
        assert not space.is_empty, f"{data['name']}: not expressible"
        path = OUT / f"{data['name']}.json"
        path.write_text(json.dumps(data, indent=2, ensure_ascii=False) + "\n")
        print(f"{data['name']}: ok ({count_programs(space)} programs on full row set)")
    print(f"{len(SCENARIOS)} scenarios written to {OUT}")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
