"""Five miniature materialized databases modelled on common relational
benchmark schemas (Formula 1, classifieds, clinical trials, Q&A site,
fashion retail), with seeded synthetic rows.

Each generator takes a ``random.Random`` and returns ``{table: rows}`` with
rows as tuples in column order.
"""

from __future__ import annotations

import datetime as dt
import random
from typing import Callable

Rows = dict[str, list[tuple]]

# --------------------------------------------------------------------------
# Schemas
# --------------------------------------------------------------------------

F1_TABLES = """
circuits: circuit_id:INTEGER*, name:TEXT, location:TEXT, country:TEXT, lat:REAL, lng:REAL
constructors: constructor_id:INTEGER*, constructor_ref:TEXT, name:TEXT, nationality:TEXT
drivers: driver_id:INTEGER*, driver_ref:TEXT, code:TEXT, forename:TEXT, surname:TEXT, dob:TEXT, nationality:TEXT
races: race_id:INTEGER*, year:INTEGER, round:INTEGER, circuit_id:INTEGER>circuits.circuit_id, name:TEXT, date:TEXT
results: result_id:INTEGER*, race_id:INTEGER>races.race_id, driver_id:INTEGER>drivers.driver_id, constructor_id:INTEGER>constructors.constructor_id, grid:INTEGER, position_order:INTEGER, points:REAL, laps:INTEGER, status:TEXT
standings: driver_standings_id:INTEGER*, race_id:INTEGER>races.race_id, driver_id:INTEGER>drivers.driver_id, points:REAL, position:INTEGER, wins:INTEGER
constructor_results: constructor_results_id:INTEGER*, race_id:INTEGER>races.race_id, constructor_id:INTEGER>constructors.constructor_id, points:REAL
constructor_standings: constructor_standings_id:INTEGER*, race_id:INTEGER>races.race_id, constructor_id:INTEGER>constructors.constructor_id, points:REAL, position:INTEGER, wins:INTEGER
qualifying: qualify_id:INTEGER*, race_id:INTEGER>races.race_id, driver_id:INTEGER>drivers.driver_id, constructor_id:INTEGER>constructors.constructor_id, position:INTEGER, q1:TEXT
"""

AVITO_TABLES = """
Category: CategoryID:INTEGER*, Level:INTEGER, ParentCategoryID:INTEGER
Location: LocationID:INTEGER*, Level:INTEGER, RegionID:INTEGER, CityID:INTEGER
UserInfo: UserID:INTEGER*, UserAgentID:INTEGER, UserAgentOSID:INTEGER, UserDeviceID:INTEGER, UserAgentFamilyID:INTEGER
AdsInfo: AdID:INTEGER*, LocationID:INTEGER>Location.LocationID, CategoryID:INTEGER>Category.CategoryID, Price:REAL, Title:TEXT, IsContext:INTEGER
SearchInfo: SearchID:INTEGER*, SearchDate:TEXT, IPID:INTEGER, UserID:INTEGER>UserInfo.UserID, IsUserLoggedOn:INTEGER, SearchQuery:TEXT, LocationID:INTEGER>Location.LocationID, CategoryID:INTEGER>Category.CategoryID
SearchStream: SearchID:INTEGER>SearchInfo.SearchID, AdID:INTEGER>AdsInfo.AdID, Position:INTEGER, ObjectType:INTEGER, HistCTR:REAL, IsClick:INTEGER
VisitStream: UserID:INTEGER>UserInfo.UserID, IPID:INTEGER, AdID:INTEGER>AdsInfo.AdID, ViewDate:TEXT
PhoneRequestsStream: UserID:INTEGER>UserInfo.UserID, IPID:INTEGER, AdID:INTEGER>AdsInfo.AdID, PhoneRequestDate:TEXT
"""

TRIAL_TABLES = """
studies: nct_id:TEXT*, start_date:TEXT, brief_title:TEXT, official_title:TEXT, phase:TEXT, study_type:TEXT, enrollment:INTEGER, overall_status:TEXT, source:TEXT, number_of_arms:INTEGER, why_stopped:TEXT
designs: id:INTEGER*, nct_id:TEXT>studies.nct_id, allocation:TEXT, intervention_model:TEXT, primary_purpose:TEXT, masking:TEXT
eligibilities: id:INTEGER*, nct_id:TEXT>studies.nct_id, gender:TEXT, minimum_age:TEXT, maximum_age:TEXT, healthy_volunteers:INTEGER
outcomes: id:INTEGER*, nct_id:TEXT>studies.nct_id, outcome_type:TEXT, title:TEXT, time_frame:TEXT, units:TEXT
outcome_analyses: id:INTEGER*, nct_id:TEXT>studies.nct_id, outcome_id:INTEGER>outcomes.id, param_type:TEXT, param_value:REAL, p_value:REAL, method:TEXT
drop_withdrawals: id:INTEGER*, nct_id:TEXT>studies.nct_id, period:TEXT, reason:TEXT, count:INTEGER
reported_event_totals: id:INTEGER*, nct_id:TEXT>studies.nct_id, event_type:TEXT, classification:TEXT, subjects_affected:INTEGER, subjects_at_risk:INTEGER
conditions: condition_id:INTEGER*, mesh_term:TEXT
interventions: intervention_id:INTEGER*, mesh_term:TEXT
facilities: facility_id:INTEGER*, name:TEXT, city:TEXT, state:TEXT, country:TEXT
sponsors: sponsor_id:INTEGER*, name:TEXT, agency_class:TEXT
conditions_studies: id:INTEGER*, nct_id:TEXT>studies.nct_id, condition_id:INTEGER>conditions.condition_id
interventions_studies: id:INTEGER*, nct_id:TEXT>studies.nct_id, intervention_id:INTEGER>interventions.intervention_id
facilities_studies: id:INTEGER*, nct_id:TEXT>studies.nct_id, facility_id:INTEGER>facilities.facility_id
sponsors_studies: id:INTEGER*, nct_id:TEXT>studies.nct_id, sponsor_id:INTEGER>sponsors.sponsor_id, lead_or_collaborator:TEXT
"""

STACK_TABLES = """
users: Id:INTEGER*, AccountId:INTEGER, DisplayName:TEXT, Location:TEXT, Reputation:INTEGER, CreationDate:TEXT
posts: Id:INTEGER*, PostTypeId:INTEGER, AcceptedAnswerId:INTEGER, ParentId:INTEGER, OwnerUserId:INTEGER>users.Id, Title:TEXT, Tags:TEXT, Score:INTEGER, ViewCount:INTEGER, CreationDate:TEXT
comments: Id:INTEGER*, PostId:INTEGER>posts.Id, UserId:INTEGER>users.Id, Score:INTEGER, Text:TEXT, CreationDate:TEXT
badges: Id:INTEGER*, UserId:INTEGER>users.Id, Class:INTEGER, Name:TEXT, Date:TEXT
postLinks: Id:INTEGER*, PostId:INTEGER>posts.Id, RelatedPostId:INTEGER>posts.Id, LinkTypeId:INTEGER, CreationDate:TEXT
postHistory: Id:INTEGER*, PostId:INTEGER>posts.Id, UserId:INTEGER>users.Id, PostHistoryTypeId:INTEGER, Text:TEXT, CreationDate:TEXT
votes: Id:INTEGER*, PostId:INTEGER>posts.Id, UserId:INTEGER>users.Id, VoteTypeId:INTEGER, CreationDate:TEXT
"""

HM_TABLES = """
customer: customer_id:TEXT*, FN:REAL, Active:REAL, club_member_status:TEXT, fashion_news_frequency:TEXT, age:INTEGER, postal_code:TEXT
article: article_id:INTEGER*, product_code:INTEGER, prod_name:TEXT, product_type_name:TEXT, product_group_name:TEXT, colour_group_name:TEXT, department_name:TEXT, index_name:TEXT, garment_group_name:TEXT, detail_desc:TEXT
transactions: t_dat:TEXT, customer_id:TEXT>customer.customer_id, article_id:INTEGER>article.article_id, price:REAL, sales_channel_id:INTEGER
"""


# --------------------------------------------------------------------------
# Helpers
# --------------------------------------------------------------------------


def _day(rng: random.Random, start: dt.date, end: dt.date) -> dt.date:
    return start + dt.timedelta(days=rng.randrange((end - start).days + 1))


def _stamp(rng: random.Random, start: dt.date, end: dt.date) -> str:
    d = _day(rng, start, end)
    return f"{d.isoformat()} {rng.randrange(24):02d}:{rng.randrange(60):02d}:{rng.randrange(60):02d}"


# --------------------------------------------------------------------------
# Formula 1
# --------------------------------------------------------------------------

_CIRCUITS = [
    ("Albert Park Grand Prix Circuit", "Melbourne", "Australia", "Australian"),
    ("Sepang International Circuit", "Kuala Lumpur", "Malaysia", "Malaysian"),
    ("Bahrain International Circuit", "Sakhir", "Bahrain", "Bahrain"),
    ("Circuit de Barcelona-Catalunya", "Montmelo", "Spain", "Spanish"),
    ("Circuit de Monaco", "Monte-Carlo", "Monaco", "Monaco"),
    ("Circuit Gilles Villeneuve", "Montreal", "Canada", "Canadian"),
    ("Silverstone Circuit", "Silverstone", "UK", "British"),
    ("Hockenheimring", "Hockenheim", "Germany", "German"),
    ("Nurburgring", "Nurburg", "Germany", "Eifel"),
    ("Hungaroring", "Budapest", "Hungary", "Hungarian"),
    ("Circuit de Spa-Francorchamps", "Spa", "Belgium", "Belgian"),
    ("Autodromo Nazionale di Monza", "Monza", "Italy", "Italian"),
    ("Autodromo Enzo e Dino Ferrari", "Imola", "Italy", "Emilia Romagna"),
    ("Autodromo del Mugello", "Mugello", "Italy", "Tuscan"),
    ("Marina Bay Street Circuit", "Marina Bay", "Singapore", "Singapore"),
    ("Suzuka Circuit", "Suzuka", "Japan", "Japanese"),
    ("Shanghai International Circuit", "Shanghai", "China", "Chinese"),
    ("Circuit of the Americas", "Austin", "USA", "United States"),
    ("Autodromo Hermanos Rodriguez", "Mexico City", "Mexico", "Mexican"),
    ("Autodromo Jose Carlos Pace", "Sao Paulo", "Brazil", "Brazilian"),
    ("Yas Marina Circuit", "Abu Dhabi", "UAE", "Abu Dhabi"),
    ("Red Bull Ring", "Spielberg", "Austria", "Austrian"),
    ("Sochi Autodrom", "Sochi", "Russia", "Russian"),
    ("Baku City Circuit", "Baku", "Azerbaijan", "Azerbaijan"),
    ("Circuit Paul Ricard", "Le Castellet", "France", "French"),
    ("Circuit Park Zandvoort", "Zandvoort", "Netherlands", "Dutch"),
    ("Jeddah Corniche Circuit", "Jeddah", "Saudi Arabia", "Saudi Arabian"),
    ("Losail International Circuit", "Lusail", "Qatar", "Qatar"),
]

_CONSTRUCTORS = [
    ("mercedes", "Mercedes", "German"),
    ("ferrari", "Ferrari", "Italian"),
    ("red_bull", "Red Bull", "Austrian"),
    ("mclaren", "McLaren", "British"),
    ("williams", "Williams", "British"),
    ("renault", "Renault", "French"),
    ("force_india", "Force India", "Indian"),
    ("toro_rosso", "Toro Rosso", "Italian"),
    ("sauber", "Sauber", "Swiss"),
    ("lotus_f1", "Lotus F1", "British"),
    ("haas", "Haas F1 Team", "American"),
    ("alpine", "Alpine F1 Team", "French"),
    ("aston_martin", "Aston Martin", "British"),
    ("alphatauri", "AlphaTauri", "Italian"),
    ("alfa", "Alfa Romeo", "Swiss"),
    ("racing_point", "Racing Point", "British"),
    ("manor", "Manor Marussia", "British"),
    ("caterham", "Caterham", "Malaysian"),
    ("hrt", "HRT", "Spanish"),
    ("virgin", "Virgin", "British"),
]

_NATIONALITIES = [
    ("German", 14), ("British", 16), ("Finnish", 6), ("French", 8), ("Spanish", 7),
    ("Italian", 7), ("Brazilian", 6), ("Dutch", 4), ("Australian", 5), ("Mexican", 3),
    ("Japanese", 5), ("Canadian", 4), ("Danish", 3), ("Russian", 3), ("Belgian", 3),
    ("American", 3), ("Swiss", 2), ("Thai", 1),
]

_FORENAMES = [
    "Lukas", "Oliver", "Max", "Sebastian", "Nico", "Lewis", "Fernando", "Kimi", "Valtteri",
    "Charles", "Carlos", "Daniel", "Pierre", "Esteban", "Lando", "George", "Alexander",
    "Sergio", "Kevin", "Romain", "Marcus", "Jenson", "Felipe", "Mark", "Paul", "Adrian",
    "Timo", "Heikki", "Jules", "Jean", "Pastor", "Bruno", "Vitaly", "Kamui", "Daniil",
    "Lance", "Stoffel", "Brendon", "Antonio", "Robert", "Yuki", "Zhou", "Nyck", "Logan",
    "Mick", "Nikita", "Felix", "Jan", "Rio", "Will",
]
_SURNAMES = [
    "Keller", "Brandt", "Hartmann", "Weber", "Fischer", "Wagner", "Becker", "Hoffmann",
    "Schulz", "Koch", "Richter", "Klein", "Wolf", "Neumann", "Schwarz", "Zimmermann",
    "Carter", "Hughes", "Palmer", "Fletcher", "Grant", "Lowe", "Marsh", "Walsh", "Barlow",
    "Virtanen", "Laine", "Moreau", "Girard", "Ortega", "Navarro", "Romano", "Bianchi",
    "Costa", "Silva", "de Vries", "Bakker", "Reid", "Tanaka", "Sato", "Morel", "Dubois",
    "Lambert", "Kovac", "Petrov", "Nielsen", "Jansen", "Peeters", "Ramirez", "Hayes",
]

_F1_POINTS = [25, 18, 15, 12, 10, 8, 6, 4, 2, 1]


def generate_f1(rng: random.Random) -> Rows:
    rows: Rows = {}
    rows["circuits"] = [
        (i + 1, name, loc, country, round(rng.uniform(-40, 60), 4), round(rng.uniform(-120, 140), 4))
        for i, (name, loc, country, _) in enumerate(_CIRCUITS)
    ]
    rows["constructors"] = [(i + 1, ref, name, nat) for i, (ref, name, nat) in enumerate(_CONSTRUCTORS)]

    nat_pool = [n for n, w in _NATIONALITIES for _ in range(w)]
    names = [(f, s) for f in _FORENAMES for s in _SURNAMES]
    rng.shuffle(names)
    drivers = []
    skill = {}
    for i in range(100):
        forename, surname = names[i]
        did = i + 1
        dob = _day(rng, dt.date(1968, 1, 1), dt.date(2003, 12, 31)).isoformat()
        ref = f"{surname.lower().replace(' ', '_')}_{forename.lower()}"
        code = surname.replace(" ", "")[:3].upper()
        drivers.append((did, ref, code, forename, surname, dob, rng.choice(nat_pool)))
        skill[did] = rng.random() ** 2
    rows["drivers"] = drivers

    races, results, standings, qualifying = [], [], [], []
    c_results, c_standings = [], []
    race_id = result_id = ds_id = q_id = cr_id = cs_id = 0
    statuses = ["Finished"] * 12 + ["+1 Lap", "+2 Laps", "Retired", "Engine", "Collision", "Gearbox"]
    for year in range(2010, 2024):
        teams = rng.sample(range(1, len(_CONSTRUCTORS) + 1), 10)
        lineup = rng.sample(range(1, 101), 20)
        team_of = {d: teams[k // 2] for k, d in enumerate(lineup)}
        n_races = rng.randint(17, 22)
        season_circuits = rng.sample(range(len(_CIRCUITS)), n_races)
        date = dt.date(year, 3, rng.randint(10, 25))
        d_points = dict.fromkeys(lineup, 0.0)
        d_wins = dict.fromkeys(lineup, 0)
        c_points = dict.fromkeys(teams, 0.0)
        c_wins = dict.fromkeys(teams, 0)
        for rnd, ci in enumerate(season_circuits, start=1):
            race_id += 1
            races.append((race_id, year, rnd, ci + 1, f"{_CIRCUITS[ci][3]} Grand Prix", date.isoformat()))
            date += dt.timedelta(days=rng.choice([7, 14, 14, 21]))

            grid_order = sorted(lineup, key=lambda d: skill[d] + rng.random() * 0.6, reverse=True)
            finish = sorted(lineup, key=lambda d: skill[d] + rng.random() * 0.8, reverse=True)
            race_c_points = dict.fromkeys(teams, 0.0)
            for pos, d in enumerate(finish, start=1):
                result_id += 1
                pts = float(_F1_POINTS[pos - 1]) if pos <= 10 else 0.0
                status = "Finished" if pos <= 8 else rng.choice(statuses)
                laps = 58 if status == "Finished" else rng.randint(5, 57)
                results.append((result_id, race_id, d, team_of[d], grid_order.index(d) + 1, pos, pts, laps, status))
                d_points[d] += pts
                race_c_points[team_of[d]] += pts
                if pos == 1:
                    d_wins[d] += 1
                    c_wins[team_of[d]] += 1
            for pos, d in enumerate(grid_order, start=1):
                q_id += 1
                lap = 78.0 + rng.random() * 14
                qualifying.append((q_id, race_id, d, team_of[d], pos, f"1:{lap - 60:06.3f}"))
            table = sorted(lineup, key=lambda d: (-d_points[d], -d_wins[d], d))
            for pos, d in enumerate(table, start=1):
                ds_id += 1
                standings.append((ds_id, race_id, d, d_points[d], pos, d_wins[d]))
            for t in teams:
                cr_id += 1
                c_results.append((cr_id, race_id, t, race_c_points[t]))
                c_points[t] += race_c_points[t]
            for pos, t in enumerate(sorted(teams, key=lambda t: (-c_points[t], -c_wins[t], t)), start=1):
                cs_id += 1
                c_standings.append((cs_id, race_id, t, c_points[t], pos, c_wins[t]))
    rows["races"] = races
    rows["results"] = results
    rows["standings"] = standings
    rows["constructor_results"] = c_results
    rows["constructor_standings"] = c_standings
    rows["qualifying"] = qualifying
    return rows


# --------------------------------------------------------------------------
# Avito (classifieds)
# --------------------------------------------------------------------------

_AD_NOUNS = [
    "bicycle", "sofa", "winter jacket", "laptop", "smartphone", "washing machine", "stroller",
    "guitar", "dining table", "car tyres", "aquarium", "sewing machine", "camera", "armchair",
    "snowboard", "microwave", "bookshelf", "kettle", "violin", "tent", "wardrobe", "printer",
]
_AD_ADJ = ["Used", "New", "Vintage", "Almost new", "Cheap", "Children's", "Large", "Compact"]


def generate_avito(rng: random.Random) -> Rows:
    rows: Rows = {}
    cats = []
    for cid in range(1, 9):
        cats.append((cid, 1, None))
    for cid in range(9, 41):
        cats.append((cid, 2, rng.randint(1, 8)))
    for cid in range(41, 57):
        cats.append((cid, 3, rng.randint(9, 40)))
    rows["Category"] = cats

    locs = []
    for lid in range(1, 61):
        level = 1 if lid <= 6 else (2 if lid <= 20 else 3)
        region = lid if level == 1 else rng.randint(1, 6)
        city = None if level < 3 else 1000 + lid
        locs.append((lid, level, region, city))
    rows["Location"] = locs

    rows["UserInfo"] = [
        (uid, rng.randint(1, 60), rng.randint(1, 12), rng.randint(1, 40), rng.randint(1, 15))
        for uid in range(1, 401)
    ]

    ads = []
    for aid in range(1, 601):
        title = f"{rng.choice(_AD_ADJ)} {rng.choice(_AD_NOUNS)}"
        is_context = 1 if rng.random() < 0.3 else 0
        price = None if rng.random() < 0.05 else round(rng.lognormvariate(7, 1.2), 2)
        ads.append((aid, rng.randint(1, 60), rng.randint(9, 56), price, title, is_context))
    rows["AdsInfo"] = ads

    searches = []
    queries = [f"{adj.lower()} {noun}" for adj in _AD_ADJ for noun in _AD_NOUNS]
    for sid in range(1, 1501):
        when = _stamp(rng, dt.date(2015, 4, 25), dt.date(2015, 5, 20))
        searches.append(
            (
                sid,
                when,
                rng.randint(1, 5000),
                rng.randint(1, 400),
                1 if rng.random() < 0.6 else 0,
                rng.choice(queries),
                rng.randint(1, 60),
                rng.randint(1, 56),
            )
        )
    rows["SearchInfo"] = searches

    stream = []
    for _ in range(3000):
        sid = rng.randint(1, 1500)
        stream.append(
            (sid, rng.randint(1, 600), rng.randint(1, 10), rng.choice([1, 2, 3]),
             round(rng.random() * 0.05, 6), 1 if rng.random() < 0.1 else 0)
        )
    rows["SearchStream"] = stream

    popular = [rng.randint(1, 600) for _ in range(40)]
    rows["VisitStream"] = [
        (rng.randint(1, 400), rng.randint(1, 5000),
         rng.choice(popular) if rng.random() < 0.4 else rng.randint(1, 600),
         _stamp(rng, dt.date(2015, 4, 25), dt.date(2015, 5, 20)))
        for _ in range(2000)
    ]
    rows["PhoneRequestsStream"] = [
        (rng.randint(1, 400), rng.randint(1, 5000),
         rng.choice(popular) if rng.random() < 0.5 else rng.randint(1, 600),
         _stamp(rng, dt.date(2015, 4, 25), dt.date(2015, 5, 20)))
        for _ in range(800)
    ]
    return rows


# --------------------------------------------------------------------------
# Clinical trials
# --------------------------------------------------------------------------

_CONDITIONS = [
    "Diabetes Mellitus", "Breast Neoplasms", "Hypertension", "Asthma", "Alzheimer Disease",
    "Depression", "Obesity", "HIV Infections", "Coronary Artery Disease", "Schizophrenia",
    "Lung Neoplasms", "Prostatic Neoplasms", "Parkinson Disease", "Rheumatoid Arthritis",
    "Multiple Sclerosis", "Psoriasis", "Migraine Disorders", "Hepatitis C", "Influenza",
    "COVID-19", "Stroke", "Heart Failure", "Chronic Kidney Disease", "Osteoarthritis",
    "Leukemia", "Lymphoma", "Epilepsy", "Anemia", "Crohn Disease", "Atrial Fibrillation",
]
_INTERVENTIONS = [
    "Metformin", "Insulin", "Placebo", "Aspirin", "Atorvastatin", "Pembrolizumab",
    "Nivolumab", "Trastuzumab", "Adalimumab", "Lisinopril", "Sertraline", "Vaccine",
    "Exercise", "Cognitive Behavioral Therapy", "Dexamethasone", "Remdesivir", "Warfarin",
    "Levetiracetam", "Methotrexate", "Rituximab", "Omeprazole", "Ibuprofen",
    "Vitamin D", "Dietary Supplement", "Radiation", "Surgery",
]
_SPONSORS = [
    ("Pfizer", "Industry"), ("Novartis", "Industry"), ("Roche", "Industry"), ("Merck Sharp & Dohme", "Industry"),
    ("AstraZeneca", "Industry"), ("Sanofi", "Industry"), ("GlaxoSmithKline", "Industry"),
    ("Bayer", "Industry"), ("Eli Lilly and Company", "Industry"), ("Boehringer Ingelheim", "Industry"),
    ("National Cancer Institute", "NIH"), ("National Heart, Lung, and Blood Institute", "NIH"),
    ("National Institute of Mental Health", "NIH"), ("Charite University, Berlin", "Other"),
    ("Mayo Clinic", "Other"), ("Karolinska Institutet", "Other"), ("University of Oxford", "Other"),
    ("Assistance Publique - Hopitaux de Paris", "Other"), ("Massachusetts General Hospital", "Other"),
    ("University of California, San Francisco", "Other"), ("Seoul National University Hospital", "Other"),
    ("Peking University", "Other"), ("Medical University of Vienna", "Other"),
    ("Rigshospitalet, Denmark", "Other"), ("U.S. Army Medical Research", "U.S. Fed"),
]
_FACILITY_CITIES = [
    ("Berlin", "Berlin", "Germany"), ("Munich", "Bavaria", "Germany"), ("Hamburg", "Hamburg", "Germany"),
    ("Boston", "Massachusetts", "United States"), ("Houston", "Texas", "United States"),
    ("New York", "New York", "United States"), ("Los Angeles", "California", "United States"),
    ("Paris", "", "France"), ("Lyon", "", "France"), ("London", "", "United Kingdom"),
    ("Oxford", "", "United Kingdom"), ("Madrid", "", "Spain"), ("Milan", "", "Italy"),
    ("Toronto", "Ontario", "Canada"), ("Seoul", "", "Korea, Republic of"), ("Beijing", "", "China"),
    ("Tokyo", "", "Japan"), ("Sydney", "New South Wales", "Australia"), ("Vienna", "", "Austria"),
    ("Copenhagen", "", "Denmark"),
]
_FACILITY_KINDS = ["University Hospital", "Medical Center", "Research Site", "Clinic", "Cancer Center"]


def generate_trial(rng: random.Random) -> Rows:
    rows: Rows = {k: [] for k in (
        "studies", "designs", "eligibilities", "outcomes", "outcome_analyses", "drop_withdrawals",
        "reported_event_totals", "conditions_studies", "interventions_studies", "facilities_studies",
        "sponsors_studies",
    )}
    rows["conditions"] = [(i + 1, t) for i, t in enumerate(_CONDITIONS)]
    rows["interventions"] = [(i + 1, t) for i, t in enumerate(_INTERVENTIONS)]
    rows["sponsors"] = [(i + 1, n, c) for i, (n, c) in enumerate(_SPONSORS)]
    facilities = []
    for fid in range(1, 121):
        city, state, country = rng.choice(_FACILITY_CITIES)
        facilities.append((fid, f"{city} {rng.choice(_FACILITY_KINDS)} {fid}", city, state or None, country))
    rows["facilities"] = facilities

    phases = ["Phase 1", "Phase 2", "Phase 3", "Phase 4", "Phase 1/Phase 2", "Phase 2/Phase 3", "N/A"]
    statuses = ["Completed"] * 6 + ["Recruiting"] * 2 + ["Terminated", "Withdrawn", "Active, not recruiting"]
    ids = {k: 0 for k in ("d", "e", "o", "oa", "dw", "re", "cs", "is", "fs", "ss")}

    def nxt(k: str) -> int:
        ids[k] += 1
        return ids[k]

    for n in range(1, 301):
        nct = f"NCT{n * 7919 % 10_000_000:08d}"
        cond = rng.randint(1, len(_CONDITIONS))
        drug = rng.randint(1, len(_INTERVENTIONS))
        cname, iname = _CONDITIONS[cond - 1], _INTERVENTIONS[drug - 1]
        phase = rng.choice(phases)
        study_type = "Observational" if phase == "N/A" and rng.random() < 0.7 else "Interventional"
        status = rng.choice(statuses)
        start = _day(rng, dt.date(1999, 1, 1), dt.date(2023, 12, 31)).isoformat()
        rows["studies"].append((
            nct, start,
            f"{iname} in Patients With {cname}",
            f"A {phase} Study of the Efficacy and Safety of {iname} in Adults With {cname} (trial {n})",
            phase, study_type, rng.randint(0, 2000) if status != "Withdrawn" else 0, status,
            rng.choice(_SPONSORS)[0], rng.randint(1, 4),
            rng.choice(["Lack of funding", "Slow accrual", "Sponsor decision"]) if status in ("Terminated", "Withdrawn") else None,
        ))
        rows["designs"].append((
            nxt("d"), nct, rng.choice(["Randomized", "Non-Randomized", None]),
            rng.choice(["Parallel Assignment", "Single Group Assignment", "Crossover Assignment"]),
            rng.choice(["Treatment", "Prevention", "Diagnostic", "Supportive Care"]),
            rng.choice(["None (Open Label)", "Double", "Triple", "Quadruple"]),
        ))
        rows["eligibilities"].append((
            nxt("e"), nct, rng.choice(["All", "All", "Female", "Male"]),
            f"{rng.choice([18, 18, 21, 40, 50, 65])} Years", rng.choice([None, "65 Years", "75 Years", "85 Years"]),
            1 if rng.random() < 0.25 else 0,
        ))
        outcome_ids = []
        for k in range(rng.randint(1, 3)):
            oid = nxt("o")
            outcome_ids.append(oid)
            rows["outcomes"].append((
                oid, nct, "Primary" if k == 0 else rng.choice(["Secondary", "Other Pre-specified"]),
                rng.choice(["Change in HbA1c", "Overall Survival", "Adverse Events", "Response Rate",
                            "Blood Pressure", "Quality of Life Score", "Hospitalization"]),
                rng.choice(["12 weeks", "24 weeks", "1 year", "5 years"]),
                rng.choice(["percentage", "participants", "mmHg", "months", "score"]),
            ))
        if status == "Completed":
            for oid in outcome_ids:
                if rng.random() < 0.6:
                    rows["outcome_analyses"].append((
                        nxt("oa"), nct, oid, rng.choice(["Mean Difference", "Hazard Ratio", "Odds Ratio"]),
                        round(rng.uniform(-3, 3), 4), round(rng.random() ** 2, 5),
                        rng.choice(["ANCOVA", "Log Rank", "Chi-squared", "t-test"]),
                    ))
            for reason in rng.sample(["Adverse Event", "Withdrawal by Subject", "Lost to Follow-up", "Protocol Violation"], 2):
                rows["drop_withdrawals"].append((nxt("dw"), nct, "Overall Study", reason, rng.randint(0, 40)))
            at_risk = rng.randint(20, 1500)
            rows["reported_event_totals"].append((nxt("re"), nct, "serious", "Total, serious adverse events", rng.randint(0, at_risk // 5), at_risk))
            rows["reported_event_totals"].append((nxt("re"), nct, "other", "Total, other adverse events", rng.randint(0, at_risk // 2), at_risk))
        conds = {cond} | {rng.randint(1, len(_CONDITIONS)) for _ in range(rng.randint(0, 1))}
        for c in sorted(conds):
            rows["conditions_studies"].append((nxt("cs"), nct, c))
        drugs = {drug} | ({3} if rng.random() < 0.3 else set())
        for d in sorted(drugs):
            rows["interventions_studies"].append((nxt("is"), nct, d))
        for f in sorted(rng.sample(range(1, 121), rng.randint(1, 6))):
            rows["facilities_studies"].append((nxt("fs"), nct, f))
        lead = rng.randint(1, len(_SPONSORS))
        rows["sponsors_studies"].append((nxt("ss"), nct, lead, "lead"))
        if rng.random() < 0.4:
            collab = rng.randint(1, len(_SPONSORS))
            if collab != lead:
                rows["sponsors_studies"].append((nxt("ss"), nct, collab, "collaborator"))
    return rows


# --------------------------------------------------------------------------
# Stack Exchange
# --------------------------------------------------------------------------

_TOPICS = [
    "bayesian", "regression", "hypothesis-testing", "time-series", "machine-learning",
    "probability", "r", "python", "neural-networks", "variance", "anova", "clustering",
]
_BADGES = [("Teacher", 3), ("Student", 3), ("Supporter", 3), ("Editor", 3), ("Scholar", 3),
           ("Commentator", 3), ("Nice Answer", 3), ("Good Question", 2), ("Enthusiast", 2),
           ("Yearling", 2), ("Necromancer", 2), ("Great Answer", 1), ("Famous Question", 1), ("Fanatic", 1)]
_LOCATIONS = [
    "Berlin, Germany", "Munich, Germany", "London, United Kingdom", "New York, NY", "Toronto, Canada",
    "Paris, France", "Bangalore, India", "Sydney, Australia", "Sao Paulo, Brazil", None,
]
_HANDLES = ["stat", "data", "prob", "bayes", "quant", "model", "sigma", "mu", "rho", "tau"]


def generate_stack(rng: random.Random) -> Rows:
    rows: Rows = {}
    users = []
    for uid in range(1, 301):
        created = _stamp(rng, dt.date(2010, 7, 1), dt.date(2022, 12, 31))
        rep = int(rng.paretovariate(1.2) * 10)
        name = f"{rng.choice(_HANDLES)}_{rng.choice(_HANDLES)}{uid}"
        users.append((uid, 10_000 + uid * 37, name, rng.choice(_LOCATIONS), rep, created))
    rows["users"] = users
    created_of = {u[0]: u[5] for u in users}

    posts = []
    questions = []
    for pid in range(1, 1201):
        owner = rng.randint(1, 300)
        when = _stamp(rng, dt.date(2011, 1, 1), dt.date(2023, 6, 30))
        when = max(when, created_of[owner])
        if not questions or rng.random() < 0.45:
            tags = "".join(f"<{t}>" for t in rng.sample(_TOPICS, rng.randint(1, 3)))
            title = f"How to interpret {rng.choice(_TOPICS).replace('-', ' ')} results ({pid})"
            posts.append([pid, 1, None, None, owner, title, tags, rng.randint(-3, 40), rng.randint(5, 20000), when])
            questions.append(pid)
        else:
            parent = rng.choice(questions)
            posts.append([pid, 2, None, parent, owner, None, None, rng.randint(-2, 60), None, when])
            if posts[parent - 1][2] is None and rng.random() < 0.5:
                posts[parent - 1][2] = pid
    rows["posts"] = [tuple(p) for p in posts]

    rows["comments"] = [
        (cid, rng.randint(1, 1200) if rng.random() < 0.7 else rng.choice(questions[:30]),
         rng.randint(1, 300), rng.randint(0, 12),
         rng.choice(["Thanks, that helps.", "Could you add a reproducible example?",
                     "This is a duplicate.", "Which software are you using?", "Nice answer!"]),
         _stamp(rng, dt.date(2011, 1, 1), dt.date(2023, 6, 30)))
        for cid in range(1, 2001)
    ]
    badge_pool = [b for b in _BADGES for _ in range(4 - b[1])]
    rows["badges"] = [
        (bid, rng.randint(1, 300), cls, name, _stamp(rng, dt.date(2011, 1, 1), dt.date(2023, 6, 30)))
        for bid, (name, cls) in ((i, rng.choice(badge_pool)) for i in range(1, 601))
    ]
    rows["postLinks"] = [
        (lid, rng.randint(1, 1200), rng.randint(1, 1200), rng.choice([1, 3]),
         _stamp(rng, dt.date(2011, 1, 1), dt.date(2023, 6, 30)))
        for lid in range(1, 201)
    ]
    rows["postHistory"] = [
        (hid, rng.randint(1, 1200), rng.randint(1, 300), rng.choice([1, 2, 3, 4, 5, 6, 10]),
         rng.choice(["initial body", "edited title", "retagged", "formatting"]),
         _stamp(rng, dt.date(2011, 1, 1), dt.date(2023, 6, 30)))
        for hid in range(1, 1501)
    ]
    rows["votes"] = [
        (vid, rng.randint(1, 1200), rng.randint(1, 300), rng.choice([2, 2, 2, 2, 3, 1, 5]),
         _day(rng, dt.date(2011, 1, 1), dt.date(2023, 6, 30)).isoformat() + " 00:00:00")
        for vid in range(1, 3001)
    ]
    return rows


# --------------------------------------------------------------------------
# H&M (fashion retail)
# --------------------------------------------------------------------------

_PRODUCT_TYPES = [
    ("Trousers", "Garment Lower body", "Trousers"), ("Dress", "Garment Full body", "Dresses Ladies"),
    ("Sweater", "Garment Upper body", "Knitwear"), ("T-shirt", "Garment Upper body", "Jersey Basic"),
    ("Shorts", "Garment Lower body", "Shorts"), ("Bra", "Underwear", "Under-, Nightwear"),
    ("Swimsuit", "Swimwear", "Swimwear"), ("Socks", "Socks & Tights", "Socks and Tights"),
    ("Jacket", "Garment Upper body", "Outdoor"), ("Sneakers", "Shoes", "Shoes"),
    ("Bag", "Accessories", "Accessories"), ("Skirt", "Garment Lower body", "Skirts"),
]
_COLOURS = ["Black", "White", "Dark Blue", "Light Pink", "Grey", "Beige", "Red", "Dark Green", "Yellow"]
_DEPARTMENTS = ["Ladieswear", "Menswear", "Divided", "Baby/Children", "Sport"]
_PROD_WORDS = ["Luna", "Tilly", "Bella", "Nova", "Ivy", "Milo", "Rex", "Skye", "Aria", "Finn", "Zoe", "Otto"]


def generate_hm(rng: random.Random) -> Rows:
    rows: Rows = {}
    customers = []
    for i in range(1, 501):
        cid = f"{i * 2654435761 % 2**32:08x}"
        customers.append((
            cid, 1.0 if rng.random() < 0.35 else None, 1.0 if rng.random() < 0.33 else None,
            rng.choice(["ACTIVE"] * 8 + ["PRE-CREATE", "LEFT CLUB"]),
            rng.choice(["NONE", "NONE", "Regularly", "Monthly"]),
            rng.randint(16, 85), f"{rng.getrandbits(32):08x}",
        ))
    rows["customer"] = customers

    articles = []
    for i in range(300):
        ptype, group, garment = rng.choice(_PRODUCT_TYPES)
        colour = rng.choice(_COLOURS)
        articles.append((
            108_775_015 + i * 1_013, 108_775 + i // 3, f"{rng.choice(_PROD_WORDS)} {ptype.lower()}", ptype, group,
            colour, rng.choice(_DEPARTMENTS), rng.choice(["Ladieswear", "Menswear", "Divided", "Children Sizes 92-140"]),
            garment, f"{colour} {ptype.lower()} in soft fabric.",
        ))
    rows["article"] = articles
    base_price = {a[0]: rng.uniform(0.005, 0.12) for a in articles}

    tx = []
    for _ in range(4000):
        cust = rng.choice(customers)[0]
        art = rng.choice(articles)[0]
        day = _day(rng, dt.date(2018, 9, 20), dt.date(2020, 9, 22)).isoformat()
        price = round(base_price[art] * rng.uniform(0.7, 1.0), 6)
        tx.append((day, cust, art, price, rng.choice([1, 2, 2])))
    tx.sort()
    rows["transactions"] = tx
    return rows


MATERIALIZED: list[dict] = [
    {
        "id": "f1",
        "name": "Formula 1",
        "domain_tag": "sports",
        "description": (
            "Formula 1 motor racing history from 2010 to 2023: circuits, constructors (teams), drivers, "
            "every grand prix race per season, race finishing positions and points, qualifying grid "
            "positions, and the driver and constructor championship standings after each race."
        ),
        "tables": F1_TABLES,
        "generate": generate_f1,
    },
    {
        "id": "avito",
        "name": "Avito",
        "domain_tag": "e-commerce",
        "description": (
            "Avito online classifieds marketplace logs from spring 2015: advertisements with prices and "
            "categories, user searches and search queries, ads shown in search streams with clicks, ad "
            "page visits, phone-number requests, and user, location and category reference data."
        ),
        "tables": AVITO_TABLES,
        "generate": generate_avito,
    },
    {
        "id": "trial",
        "name": "Clinical Trials",
        "domain_tag": "medicine",
        "description": (
            "Registry of clinical trials and medical studies: study titles, phases, enrollment and "
            "status, study designs, eligibility criteria, outcomes and their statistical analyses, "
            "dropouts, adverse event totals, conditions, interventions, facilities and sponsors."
        ),
        "tables": TRIAL_TABLES,
        "generate": generate_trial,
    },
    {
        "id": "stack",
        "name": "Stack Exchange",
        "domain_tag": "social",
        "description": (
            "Stack Exchange question-and-answer site for statistics: registered users with reputation, "
            "questions and answers (posts), comments, badges, votes, links between related posts and "
            "the edit history of posts."
        ),
        "tables": STACK_TABLES,
        "generate": generate_stack,
    },
    {
        "id": "hm",
        "name": "H&M",
        "domain_tag": "retail",
        "description": (
            "H&M fashion retailer sales data: club member customers with age and membership status, "
            "product articles with type, colour, department and garment group, and purchase "
            "transactions with prices and sales channel from 2018 to 2020."
        ),
        "tables": HM_TABLES,
        "generate": generate_hm,
    },
]

GENERATORS: dict[str, Callable[[random.Random], Rows]] = {m["id"]: m["generate"] for m in MATERIALIZED}
