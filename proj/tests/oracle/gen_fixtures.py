#!/usr/bin/env python3
"""Builds the end-to-end fixture set used by the integration tests:

  tests/data/corpus.jsonl   -- 200-document lexical corpus
  tests/data/replay/cases.jsonl -- scripted chat transcripts, keyed by
                                   template-id + first 64 bytes of the
                                   salient input
  tests/data/dataset/five.jsonl -- five-question benchmark dataset
  tests/data/dataset/malformed.jsonl -- dataset with broken lines mixed in

Run from the repository root:  python3 tests/oracle/gen_fixtures.py
"""
import json
import os
import textwrap

HERE = os.path.dirname(os.path.abspath(__file__))
DATA = os.path.join(os.path.dirname(HERE), "data")


# ---------------------------------------------------------------------------
# replay fingerprints (mirror of the runtime's truncation rule)

def fingerprint(template_id, salient):
    data = salient.encode("utf-8")
    if len(data) > 64:
        n = 64
        while n > 0 and (data[n] & 0xC0) == 0x80:
            n -= 1
        data = data[:n]
    return template_id + "|" + data.decode("utf-8")


def ans(text, note="Doc [1] supports this."):
    return f"<thinking>{note}</thinking>\n<answer> {text} </answer>"


ANS_UNKNOWN = ans("unknown", "The documents do not say.")


def fenced(code):
    code = textwrap.dedent(code).strip("\n") + "\n"
    return "```python\n" + code + "```"


# ---------------------------------------------------------------------------
# corpus

TOPICAL_DOCS = [
    ("2014 S/S",
     "2014 S/S is the debut studio album of the South Korean boy group WINNER. "
     "It was released on August 12, 2014 by the group's label and debuted at "
     "number one on the Gaon Album Chart."),
    ("WINNER",
     "WINNER is a South Korean boy group formed in 2013 by YG Entertainment "
     "through the reality survival program WIN: Who Is Next. The group made "
     "its debut in August 2014 with the studio album 2014 S/S."),
    ("YG Entertainment",
     "YG Entertainment is a South Korean multinational entertainment agency. "
     "The company manages several notable artists and formed the boy group "
     "WINNER in 2013."),
    ("Sergio Pérez",
     "Sergio Pérez Mendoza is a Mexican racing driver. Born on January "
     "26, 1990 in Guadalajara, he drove in Formula One for Sauber and Force "
     "India, and he has held the podium several times in his Formula One "
     "career."),
    ("Pedro Rodríguez",
     "Pedro Rodríguez de la Vega was a Mexican Formula One race car "
     "driver from Mexico City. He won two Grands Prix and held the podium "
     "several times during the 1960s and early 1970s."),
    ("Force India",
     "Force India was a Formula One racing team based in Silverstone, "
     "England. The team competed from 2008 until 2018 and fielded drivers "
     "including Sergio Pérez and Nico Hülkenberg."),
    ("Mexican Grand Prix",
     "The Mexican Grand Prix is a Formula One motor race held in Mexico "
     "City. Mexican drivers Pedro Rodríguez and Sergio Pérez have "
     "both stood on a Formula One podium."),
    ("Freakonomics (film)",
     "Freakonomics is a 2010 American documentary film based on the book of "
     "the same name by the economist Steven Levitt and the writer Stephen "
     "Dubner."),
    ("In the Realm of the Hackers",
     "In the Realm of the Hackers is a 2003 Australian documentary film "
     "about the Melbourne computer underground of the late 1980s."),
    ("Apple Remote",
     "The Apple Remote is a remote control introduced in October 2005 by "
     "Apple Inc. It was originally designed to control the Front Row media "
     "center program on the iMac G5 and later models."),
    ("Front Row (software)",
     "Front Row is a discontinued media center software application for "
     "Apple Macintosh computers. It presents music, photos and video in a "
     "full-screen interface navigated with a remote control."),
    ("iTunes",
     "iTunes is a media player and media library application developed by "
     "Apple Inc. Devices such as the iPod Touch and the iPad can control "
     "iTunes remotely through a companion application."),
    ("iPod Touch",
     "The iPod Touch is a handheld device designed and marketed by Apple "
     "Inc. with a touchscreen interface. It can run a remote application to "
     "control media playback on a computer."),
    ("Kirton End",
     "Kirton End is a hamlet in the Borough of Boston in Lincolnshire, "
     "England. It lies about one mile west of the village of Kirton."),
    ("Kirton, Lincolnshire",
     "Kirton is a village and civil parish in the Borough of Boston, "
     "Lincolnshire, England. The village lies a few miles south of the town "
     "of Boston."),
    ("Boston, Lincolnshire",
     "Boston is a town and small port in the borough of the same name in "
     "Lincolnshire, England. According to the 2001 census, Boston had a "
     "population of 35,124."),
    ("Sibsey",
     "Sibsey is a village and civil parish in Lincolnshire, England. In the "
     "2001 census the parish recorded a population of 12,790 across its "
     "wider ward."),
    ("Henry Roth",
     "Henry Roth was an American novelist. Born in Tysmenitz, Galicia, he "
     "grew up in New York City and wrote the novel Call It Sleep."),
    ("Robert Erskine Childers",
     "Robert Erskine Childers was a writer born in London, England, who "
     "wrote the novel The Riddle of the Sands and later became an Irish "
     "nationalist."),
    ("Northwestern University",
     "Northwestern University is a private research university in Evanston, "
     "Illinois, founded in 1851."),
    ("Middlebury College",
     "Middlebury College is a private liberal arts college in Middlebury, "
     "Vermont, founded in 1800."),
    ("Virginia Bruce",
     "Virginia Bruce was an American actress and singer. She was born Helen "
     "Virginia Briggs on September 29, 1910 in Minneapolis, Minnesota."),
    ("Let Freedom Ring (film)",
     "Let Freedom Ring is a 1939 American film starring Nelson Eddy and "
     "Virginia Bruce, released by Metro-Goldwyn-Mayer."),
    ("Aaron Goodwin",
     "Aaron Goodwin is an American sports agent. His clients have included "
     "the basketball players LeBron James, Dwight Howard, Chris Webber, and "
     "Nate Robinson."),
    ("Nate Robinson",
     "Nate Robinson is an American former professional basketball player. "
     "He was born on May 31, 1984 in Seattle, Washington."),
    ("LeBron James",
     "LeBron Raymone James is an American professional basketball player. "
     "He was born on December 30, 1984 in Akron, Ohio."),
    ("Dwight Howard",
     "Dwight David Howard is an American professional basketball player. He "
     "was born on December 8, 1985 in Atlanta, Georgia."),
    ("Chris Webber",
     "Mayce Edward Christopher Webber III is an American former "
     "professional basketball player, born on March 1, 1973 in Detroit, "
     "Michigan."),
    ("Guadalajara",
     "Guadalajara is a metropolis in western Mexico and the capital of the "
     "state of Jalisco."),
    ("Gaon Album Chart",
     "The Gaon Album Chart is a South Korean record chart that ranks the "
     "weekly sales of albums released in South Korea."),
]

# filler templates; vocabulary deliberately avoids the sentinel phrases, the
# token "yes", and the gold phrases the failure tests probe for
RIVERS = ["Alder", "Birchwater", "Cedar Run", "Darnell", "Eastbrook",
          "Fenwick", "Glimmer", "Hollowbeck", "Ironford", "Juniper"]
TOWNS = ["Ashgrove", "Bellmore", "Claywick", "Dunholm", "Elderfield",
         "Farrowgate", "Gorseton", "Hartleigh", "Ivymoor", "Jarrowden",
         "Kestrelby", "Lindenholt", "Marrowvale", "Nettleford", "Oakhurst"]
NOVELS = ["The Glass Orchard", "A Winter Ledger", "The Tin Compass",
          "Harbor of Stone", "The Paper Meridian", "Salt and Cinder",
          "The Quiet Almanac", "Riverless", "The Copper Veil", "Lanterns"]
AUTHORS = ["Mira Calloway", "Edmund Pryce", "Sofia Lindgren", "Tomas Veidt",
           "Clara Ostrow", "Bennet Hale", "Ingrid Maren", "Victor Solano",
           "Paulina Serrano", "Oswald Finch"]
PAINTERS = ["Aurelio Brandt", "Celeste Marchand", "Dmitri Volkoff",
            "Elena Castellan", "Frederik Holm", "Giulia Ferrante",
            "Henrik Dalgaard", "Isabel Quintero", "Jonas Weller",
            "Katarina Brezhnik"]
MOUNTAINS = ["Mount Arven", "Caldergast Peak", "The Drumlin Horn",
             "Eskarp Ridge", "Farholm Summit", "Grey Tor", "Hallowspire",
             "Ibex Crag", "Jora Massif", "Kettlemoor Fell"]
GROUPS = ["Starlit Avenue", "Paper Lanterns", "The Marble Arches",
          "Velvet Morning", "Northern Signal", "Glass Parade",
          "The Ivory Coastline", "Monsoon Diary", "Cobalt Hour",
          "Silver Orchard"]
COUNTRIES = ["Norway", "Portugal", "Chile", "Austria", "Vietnam", "Ghana",
             "Finland", "Uruguay", "Nepal", "Croatia"]

FILLERS = []
for i, name in enumerate(RIVERS):
    FILLERS.append((f"River {name}",
                    f"The {name} is a river in {COUNTRIES[i % 10]}. It flows "
                    f"for about {40 + 7 * i} kilometres before joining a "
                    f"larger waterway near the coast."))
for i, name in enumerate(TOWNS):
    FILLERS.append((name,
                    f"{name} is a small town in {COUNTRIES[(i + 3) % 10]}. "
                    f"In the 2001 census the town recorded a population of "
                    f"{2100 + 317 * i}."))
for i, name in enumerate(NOVELS):
    FILLERS.append((name,
                    f"{name} is a novel by the writer {AUTHORS[i]}, first "
                    f"published in {1951 + 4 * i}. The book follows a "
                    f"narrator travelling through a provincial landscape."))
for i, name in enumerate(AUTHORS):
    FILLERS.append((name,
                    f"{name} is a writer best known for the novel "
                    f"{NOVELS[(i + 1) % 10]}. Critics praised the author's "
                    f"spare prose and attention to landscape."))
for i, name in enumerate(PAINTERS):
    FILLERS.append((name,
                    f"{name} was a painter born in {1801 + 13 * i} in "
                    f"{COUNTRIES[(i + 5) % 10]}. The painter is remembered "
                    f"for large canvases of harbours and winter fields."))
for i, name in enumerate(MOUNTAINS):
    FILLERS.append((name,
                    f"{name} is a mountain in {COUNTRIES[(i + 7) % 10]} "
                    f"rising to {1220 + 95 * i} metres. The first recorded "
                    f"ascent took place in {1870 + 9 * i}."))
for i, name in enumerate(GROUPS):
    FILLERS.append((name,
                    f"{name} is a pop group formed in {1998 + i} in "
                    f"{COUNTRIES[(i + 2) % 10]}. The group released its "
                    f"debut album in {2000 + i} and toured widely."))

EXTRA_TOPICS = [
    ("observatory", "an astronomical observatory operating since"),
    ("lighthouse", "a lighthouse first lit in"),
    ("railway station", "a railway station opened in"),
    ("botanical garden", "a botanical garden established in"),
    ("museum", "a museum of regional history founded in"),
    ("bridge", "a stone arch bridge completed in"),
    ("harbour", "a fishing harbour in continuous use since"),
    ("library", "a public lending library opened in"),
    ("windmill", "a restored tower windmill dating from"),
    ("aqueduct", "an aqueduct carrying a canal since"),
]
n_extra = 200 - len(TOPICAL_DOCS) - len(FILLERS)
for i in range(n_extra):
    kind, phrase = EXTRA_TOPICS[i % len(EXTRA_TOPICS)]
    town = TOWNS[i % len(TOWNS)]
    FILLERS.append((f"{town} {kind}",
                    f"The {town} {kind} is {phrase} {1820 + 3 * i}. It "
                    f"remains a landmark of the surrounding district."))


def build_corpus():
    docs = []
    for i, (title, text) in enumerate(TOPICAL_DOCS + FILLERS):
        docs.append({"id": f"d{i + 1:03d}", "title": title, "text": text})
    assert len(docs) == 200, len(docs)
    for d in docs:
        blob = (d["title"] + " " + d["text"]).lower()
        assert "yes" not in blob, d
        assert "keyboard function keys" not in blob, d
        for phrase in ("unknown", "cannot answer", "not enough information",
                       "no information"):
            assert phrase not in blob, d
    return docs


# ---------------------------------------------------------------------------
# scripted transcripts

Q_A = ("2014 S/S is the debut album of a South Korean boy group that was "
       "formed by who?")
Q_B = ("Which other Mexican Formula One race car driver has held the podium "
       "besides the Force India driver born in 1990?")
Q_C = "Are Freakonomics and In the Realm of the Hackers both American documentaries?"
Q_D = "How old was Virginia Bruce when she starred in Let Freedom Ring?"
Q_F1 = ("Aside from the Apple Remote, what other device can control the "
        "program Apple Remote was originally designed to interact with?")
Q_F2 = ("According to the 2001 census, what was the population of the city "
        "in which Kirton End is located?")
Q_F3 = "Which writer was from England, Henry Roth or Robert Erskine Childers?"
Q_F4 = "Are Northwestern University and Middlebury College both private schools?"
Q_F5 = "Which of Aaron Goodwin's clients was born on May 31, 1984?"

PLAN_A = fenced('''
    # Step 1-2: identify the boy group
    ctx_grp = retrieve("2014 S/S debut South Korean boy group", topk=5)
    group   = answer("Which group is the album by?", ctx_grp)

    # Step 3-4: the next query uses the bound variable group
    ctx_co  = retrieve(f"Which company formed {group}?", topk=5)
    company = answer(f"Which company formed {group}?", ctx_co)

    # Step 5: final aggregation over the two intermediate variables
    final = answer(
        f"Given: {group} is a South Korean boy group; "
        f"{company} formed {group}. "
        f"Answer the question: 2014 S/S is the debut album "
        f"of a South Korean boy group that was formed by who?",
        ctx_co)
''')

FINAL_A = ("Given: WINNER is a South Korean boy group; YG Entertainment "
           "formed WINNER. Answer the question: 2014 S/S is the debut album "
           "of a South Korean boy group that was formed by who?")

PLAN_B = fenced('''
    # Step 1-2: a known Mexican F1 podium driver
    ctx_a = retrieve("Mexican F1 driver who held the podium", topk=5)
    known = answer("Who is the Mexican F1 podium driver?", ctx_a)

    # Step 3-4: identify the Force India driver born in 1990
    ctx_b   = retrieve("Force India driver born in 1990", topk=5)
    exclude = answer("Which Force India driver was born in 1990?", ctx_b)

    # Step 5-6: enumerate the other podium drivers
    ctx_p  = retrieve(f"Mexican Formula One podium drivers besides {known}", topk=5)
    others = answer(f"Which Mexican F1 drivers besides {known} have held the podium?", ctx_p)

    # Step 7: final aggregation templates in the bound variables
    final = answer(
        f"Given: {known} is a Mexican F1 podium driver; "
        f"the Force India driver born in 1990 is {exclude}; "
        f"other Mexican podium drivers include {others}. "
        f"Which other Mexican F1 podium driver is there besides {known}?",
        ctx_b)
''')

FINAL_B = ("Given: Sergio Pérez is a Mexican F1 podium driver; the "
           "Force India driver born in 1990 is Pedro Rodríguez and "
           "Sergio Pérez; other Mexican podium drivers include Pedro "
           "Rodríguez. Which other Mexican F1 podium driver is there "
           "besides Sergio Pérez?")

PLAN_C = fenced('''
    films      = ["Freakonomics", "In the Realm of the Hackers"]
    predicates = ["is a documentary", "is American"]

    # Two predicates per film -> grid of 4 probes
    flags = {f: {} for f in films}
    for film in films:
        for pred in predicates:
            ctx               = retrieve(f"Is {film} {pred}?", topk=5)
            flags[film][pred] = answer(f"Is {film} {pred}?", ctx)

    # Boolean structure handled in the program, not by the answer agent
    def qualifies(d):
        return all(v.lower() == "yes" for v in d.values())

    if all(qualifies(flags[f]) for f in films):
        final = "yes"
    else:
        final = "no"
''')

PLAN_D = fenced('''
    import re

    # Two retrievals supply the numeric inputs
    ctx_film = retrieve("In what year did Virginia Bruce star in Let Freedom Ring?", topk=5)
    year_str = answer("In what year did Virginia Bruce star in Let Freedom Ring?", ctx_film)

    ctx_born = retrieve("In what year was Virginia Bruce born?", topk=5)
    born_str = answer("In what year was Virginia Bruce born?", ctx_born)

    # Cast text -> int and compute the difference deterministically
    year_film = int(re.search(r"\\d{4}", year_str).group())
    year_born = int(re.search(r"\\d{4}", born_str).group())
    final     = year_film - year_born
''')

PLAN_F1 = fenced('''
    # Step 1-2: identify the program
    ctx_p   = retrieve("Program the Apple Remote was designed for", topk=5)
    program = answer("What program is Apple Remote designed for?", ctx_p)

    # Step 3-4: should use the bound variable, but hard-codes iTunes
    ctx_d  = retrieve("What other devices can control iTunes?", topk=5)
    device = answer("What other devices can control iTunes?", ctx_d)

    # Step 5: the final answer consumes the drifted variable
    final = answer(
        f"Given: Apple Remote was designed for {program}; "
        f"other devices that can control {program} include {device}. "
        f"Aside from the Apple Remote, what other device can control {program}?",
        ctx_d)
''')

FINAL_F1 = ("Given: Apple Remote was designed for Front Row; other devices "
            "that can control Front Row include iPod Touch, iPad. Aside "
            "from the Apple Remote, what other device can control Front Row?")

PLAN_F2 = fenced('''
    # Step 1-2: locality lookup
    ctx_loc  = retrieve("Where is Kirton End located?", topk=5)
    locality = answer("Where is Kirton End located?", ctx_loc)

    # Step 3-4: the next hop, the city containing the locality
    ctx_city = retrieve(f"In what city is {locality}?", topk=10)
    city     = answer(f"In what city is {locality}?", ctx_city)

    # Step 5-6: the sentinel is interpolated as a content string
    ctx_pop = retrieve(f"Population of {city} in the 2001 census", topk=5)
    pop     = answer(f"Population of {city} in the 2001 census?", ctx_pop)

    # Step 7: the final answer consumes the corrupted hop
    final = answer(
        f"Given: Kirton End is located in {locality}; "
        f"the containing city is {city}; "
        f"the 2001 census population of {city} was {pop}. "
        f"What was the 2001 census population of the city in which Kirton End is located?",
        ctx_pop)
''')

FINAL_F2 = ("Given: Kirton End is located in Kirton, Lincolnshire; the "
            "containing city is unknown; the 2001 census population of "
            "unknown was 12,790. What was the 2001 census population of the "
            "city in which Kirton End is located?")

PLAN_F3 = fenced('''
    # Step 1-2: Henry Roth
    ctx_h = retrieve("Is Henry Roth from England?", topk=5)
    henry = answer("Is Henry Roth from England?", ctx_h)

    # Step 3-4: Robert Erskine Childers
    ctx_c    = retrieve("Is Robert Erskine Childers from England?", topk=5)
    childers = answer("Is Robert Erskine Childers from England?", ctx_c)

    # Step 5: final aggregation over the two probe results
    final = answer(
        f"Given: Henry Roth from England = {henry}; "
        f"Robert Erskine Childers from England = {childers}. "
        f"Which writer was from England, Henry Roth or Robert Erskine Childers?",
        ctx_c)
''')

FINAL_F3 = ("Given: Henry Roth from England = no; Robert Erskine Childers "
            "from England = yes. Which writer was from England, Henry Roth "
            "or Robert Erskine Childers?")

PLAN_F4 = fenced('''
    schools = ["Northwestern University", "Middlebury College"]
    flags   = {}
    # Per-school predicate check
    for s in schools:
        ctx      = retrieve(f"Is {s} a private school?", topk=5)
        flags[s] = answer(f"Is {s} a private school?", ctx)

    # Final aggregation delegates the conjunction to the answer agent
    final = answer(
        f"Given: Northwestern University is {flags[schools[0]]}, "
        f"Middlebury College is {flags[schools[1]]}. "
        f"Are Northwestern University and Middlebury College both private schools?",
        ctx)
''')

FINAL_F4 = ("Given: Northwestern University is yes, Middlebury College is "
            "yes. Are Northwestern University and Middlebury College both "
            "private schools?")

PLAN_F5 = fenced('''
    ctx_cli = retrieve("Who are Aaron Goodwin's clients?", topk=5)
    clients = answer("List Aaron Goodwin's clients.", ctx_cli)

    # Iterating the string yields one character per step
    births = {}
    for name in clients:
        ctx          = retrieve(f"When is the birthdate of {name}?", topk=5)
        births[name] = answer(f"When is the birthdate of {name}?", ctx)

    final = answer(f"Given: {births}. Which client was born on May 31, 1984?", ctx)
''')

CLIENTS = "LeBron James, Dwight Howard, Chris Webber, Nate Robinson"


def build_replay():
    entries = []

    def add(template_id, salient, response):
        entries.append({"fingerprint": fingerprint(template_id, salient),
                        "response": response})

    # scenario A: clean two-hop chain
    add("plan-user", Q_A, PLAN_A)
    add("answer-evidence", "Which group is the album by?", ans("WINNER"))
    add("answer-evidence", "Which company formed WINNER?",
        ans("YG Entertainment"))
    add("answer-evidence", FINAL_A, ans("YG Entertainment"))

    # scenario B: sentinel at k=5 earns one boosted re-retrieval at k=10
    add("plan-user", Q_B, PLAN_B)
    add("answer-evidence", "Who is the Mexican F1 podium driver?",
        ans("Sergio Pérez"))
    add("answer-evidence", "Which Force India driver was born in 1990?",
        ANS_UNKNOWN)
    add("answer-evidence", "Which Force India driver was born in 1990?",
        ans("Pedro Rodríguez and Sergio Pérez"))
    add("answer-evidence",
        "Which Mexican F1 drivers besides Sergio Pérez have held the "
        "podium?", ans("Pedro Rodríguez"))
    add("answer-evidence", FINAL_B, ans("Pedro Rodríguez"))

    # scenario C: boolean grid decided by the program
    add("plan-user", Q_C, PLAN_C)
    add("answer-evidence", "Is Freakonomics is a documentary?", ans("no"))
    add("answer-evidence", "Is Freakonomics is American?", ans("yes"))
    add("answer-evidence", "Is In the Realm of the Hackers is a documentary?",
        ans("yes"))
    add("answer-evidence", "Is In the Realm of the Hackers is American?",
        ans("no"))

    # scenario D: interpreter arithmetic over retrieved years
    add("plan-user", Q_D, PLAN_D)
    add("answer-evidence",
        "In what year did Virginia Bruce star in Let Freedom Ring?",
        ans("1939"))
    add("answer-evidence", "In what year was Virginia Bruce born?",
        ans("1910"))

    # scenario F1: entity drift in the second hop
    add("plan-user", Q_F1, PLAN_F1)
    add("answer-evidence", "What program is Apple Remote designed for?",
        ans("Front Row"))
    add("answer-evidence", "What other devices can control iTunes?",
        ans("iPod Touch, iPad"))
    add("answer-evidence", FINAL_F1, ans("iPod Touch, iPad"))

    # scenario F2: sentinel propagates as a content string (k=10, no boost)
    add("plan-user", Q_F2, PLAN_F2)
    add("answer-evidence", "Where is Kirton End located?",
        ans("Kirton, Lincolnshire"))
    add("answer-evidence", "In what city is Kirton, Lincolnshire?",
        ANS_UNKNOWN)
    add("answer-evidence", "Population of unknown in the 2001 census?",
        ans("12,790"))
    add("answer-evidence", FINAL_F2, ans("12,790"))

    # scenario F3: correct variables, contradictory aggregation
    add("plan-user", Q_F3, PLAN_F3)
    add("answer-evidence", "Is Henry Roth from England?", ans("no"))
    add("answer-evidence", "Is Robert Erskine Childers from England?",
        ans("yes"))
    add("answer-evidence", FINAL_F3, ans("Neither"))

    # scenario F4: conjunction flipped by the answer agent
    add("plan-user", Q_F4, PLAN_F4)
    add("answer-evidence", "Is Northwestern University a private school?",
        ans("yes"))
    add("answer-evidence", "Is Middlebury College a private school?",
        ans("yes"))
    add("answer-evidence", FINAL_F4, ans("No"))

    # scenario F5: string iterated character-by-character until the tool
    # budget runs out; the per-character probes come from the test's fallback
    add("plan-user", Q_F5, PLAN_F5)
    add("answer-evidence", "List Aaron Goodwin's clients.", ans(CLIENTS))

    return entries


DATASET = [
    {"id": "q-album", "question": Q_A, "golden_answers": ["YG Entertainment"]},
    {"id": "q-films", "question": Q_C, "golden_answers": ["no"]},
    {"id": "q-age", "question": Q_D, "golden_answers": ["29"]},
    {"id": "q-census", "question": Q_F2, "golden_answers": ["35,124"]},
    {"id": "q-writer", "question": Q_F3,
     "golden_answers": ["Robert Erskine Childers"]},
]


def main():
    os.makedirs(os.path.join(DATA, "replay"), exist_ok=True)
    os.makedirs(os.path.join(DATA, "dataset"), exist_ok=True)

    with open(os.path.join(DATA, "corpus.jsonl"), "w") as f:
        for doc in build_corpus():
            f.write(json.dumps(doc, ensure_ascii=False) + "\n")

    with open(os.path.join(DATA, "replay", "cases.jsonl"), "w") as f:
        for entry in build_replay():
            f.write(json.dumps(entry, ensure_ascii=False) + "\n")

    with open(os.path.join(DATA, "dataset", "five.jsonl"), "w") as f:
        for rec in DATASET:
            f.write(json.dumps(rec, ensure_ascii=False) + "\n")

    # same five questions with malformed lines interleaved
    with open(os.path.join(DATA, "dataset", "malformed.jsonl"), "w") as f:
        f.write("this is not json\n")
        for i, rec in enumerate(DATASET):
            f.write(json.dumps(rec, ensure_ascii=False) + "\n")
            if i == 1:
                f.write(json.dumps({"id": "broken", "question": "no golds"},
                                   ensure_ascii=False) + "\n")
            if i == 3:
                f.write("[1, 2, 3]\n")

    print("wrote corpus.jsonl, replay/cases.jsonl, dataset/*.jsonl")


if __name__ == "__main__":
    main()
