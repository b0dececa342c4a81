"""Authored schema-only distractor databases.

The first eight join the "medium" setting (+117 tables), the remaining ten
complete the "large" setting (+160 tables). None of them holds rows.
"""

from __future__ import annotations

SIMULATED_SCHEMAS: list[dict[str, str]] = [
    # ------------------------------------------------------------ medium
    {
        "id": "motorsport_archive",
        "name": "Motorsport Archive",
        "domain_tag": "sports",
        "setting": "medium",
        "description": "Historic touring-car and rally archive: events, stages, crews, vehicles and timing sheets.",
        "tables": """
series: series_id:INTEGER*, name:TEXT, category:TEXT, founded:INTEGER
seasons: season_id:INTEGER*, series_id:INTEGER>series.series_id, year:INTEGER, champion_crew_id:INTEGER
circuits: circuit_id:INTEGER*, name:TEXT, country:TEXT, surface:TEXT, length_km:REAL
races: race_id:INTEGER*, season_id:INTEGER>seasons.season_id, circuit_id:INTEGER>circuits.circuit_id, event_date:DATE, name:TEXT
stages: stage_id:INTEGER*, race_id:INTEGER>races.race_id, stage_no:INTEGER, distance_km:REAL, surface:TEXT
teams: team_id:INTEGER*, name:TEXT, base_country:TEXT, manufacturer_id:INTEGER>manufacturers.manufacturer_id
manufacturers: manufacturer_id:INTEGER*, name:TEXT, country:TEXT
drivers: driver_id:INTEGER*, first_name:TEXT, last_name:TEXT, birth_date:DATE, country:TEXT
co_drivers: co_driver_id:INTEGER*, first_name:TEXT, last_name:TEXT, country:TEXT
crews: crew_id:INTEGER*, driver_id:INTEGER>drivers.driver_id, co_driver_id:INTEGER>co_drivers.co_driver_id, team_id:INTEGER>teams.team_id
vehicles: vehicle_id:INTEGER*, manufacturer_id:INTEGER>manufacturers.manufacturer_id, model:TEXT, vehicle_class:TEXT, power_hp:INTEGER
entries: entry_id:INTEGER*, race_id:INTEGER>races.race_id, crew_id:INTEGER>crews.crew_id, vehicle_id:INTEGER>vehicles.vehicle_id, car_number:INTEGER
stage_times: stage_time_id:INTEGER*, stage_id:INTEGER>stages.stage_id, entry_id:INTEGER>entries.entry_id, time_ms:INTEGER, penalty_ms:INTEGER
penalties: penalty_id:INTEGER*, entry_id:INTEGER>entries.entry_id, reason:TEXT, seconds:INTEGER
retirements: retirement_id:INTEGER*, entry_id:INTEGER>entries.entry_id, stage_id:INTEGER>stages.stage_id, cause:TEXT
""",
    },
    {
        "id": "parliament",
        "name": "Parliament Records",
        "domain_tag": "politics",
        "setting": "medium",
        "description": "National parliament records: members, parties, committees, bills, debates and roll-call votes.",
        "tables": """
chambers: chamber_id:INTEGER*, name:TEXT, seat_count:INTEGER
legislative_terms: term_id:INTEGER*, chamber_id:INTEGER>chambers.chamber_id, start_date:DATE, end_date:DATE
parties: party_id:INTEGER*, name:TEXT, abbreviation:TEXT, ideology:TEXT, founded:INTEGER
members: member_id:INTEGER*, full_name:TEXT, birth_date:DATE, gender:TEXT, party_id:INTEGER>parties.party_id
seats: seat_id:INTEGER*, term_id:INTEGER>legislative_terms.term_id, member_id:INTEGER>members.member_id, constituency:TEXT
committees: committee_id:INTEGER*, chamber_id:INTEGER>chambers.chamber_id, name:TEXT, policy_area:TEXT
committee_memberships: membership_id:INTEGER*, committee_id:INTEGER>committees.committee_id, member_id:INTEGER>members.member_id, role:TEXT
bills: bill_id:INTEGER*, term_id:INTEGER>legislative_terms.term_id, title:TEXT, introduced_on:DATE, status:TEXT
bill_sponsors: bill_sponsor_id:INTEGER*, bill_id:INTEGER>bills.bill_id, member_id:INTEGER>members.member_id, is_primary:BOOLEAN
readings: reading_id:INTEGER*, bill_id:INTEGER>bills.bill_id, reading_no:INTEGER, held_on:DATE
debates: debate_id:INTEGER*, bill_id:INTEGER>bills.bill_id, held_on:DATE, duration_min:INTEGER
speeches: speech_id:INTEGER*, debate_id:INTEGER>debates.debate_id, member_id:INTEGER>members.member_id, word_count:INTEGER
roll_calls: roll_call_id:INTEGER*, bill_id:INTEGER>bills.bill_id, held_on:DATE, outcome:TEXT
ballots: ballot_id:INTEGER*, roll_call_id:INTEGER>roll_calls.roll_call_id, member_id:INTEGER>members.member_id, choice:TEXT
""",
    },
    {
        "id": "retail_crm",
        "name": "Retail CRM",
        "domain_tag": "business",
        "setting": "medium",
        "description": "Customer relationship data of a consumer electronics chain: shops, loyalty, orders and returns.",
        "tables": """
customer: customer_id:INTEGER*, first_name:TEXT, last_name:TEXT, email:TEXT, birth_year:INTEGER, signup_date:DATE
addresses: address_id:INTEGER*, customer_id:INTEGER>customer.customer_id, street:TEXT, city:TEXT, postcode:TEXT, country:TEXT
loyalty_accounts: loyalty_id:INTEGER*, customer_id:INTEGER>customer.customer_id, tier:TEXT, points:INTEGER
shops: shop_id:INTEGER*, name:TEXT, city:TEXT, opened_on:DATE, floor_area_m2:INTEGER
staff: staff_id:INTEGER*, shop_id:INTEGER>shops.shop_id, full_name:TEXT, role:TEXT
brands: brand_id:INTEGER*, name:TEXT, country:TEXT
product_lines: line_id:INTEGER*, brand_id:INTEGER>brands.brand_id, name:TEXT, launch_year:INTEGER
skus: sku_id:INTEGER*, line_id:INTEGER>product_lines.line_id, label:TEXT, list_price:REAL
orders: order_id:INTEGER*, customer_id:INTEGER>customer.customer_id, shop_id:INTEGER>shops.shop_id, ordered_at:TIMESTAMP, channel:TEXT
order_lines: order_line_id:INTEGER*, order_id:INTEGER>orders.order_id, sku_id:INTEGER>skus.sku_id, quantity:INTEGER, unit_price:REAL
transactions: transaction_id:INTEGER*, order_id:INTEGER>orders.order_id, paid_at:TIMESTAMP, amount:REAL, method:TEXT
returns: return_id:INTEGER*, order_line_id:INTEGER>order_lines.order_line_id, returned_on:DATE, reason:TEXT
coupons: coupon_id:INTEGER*, code:TEXT, discount_pct:REAL, valid_until:DATE
coupon_redemptions: redemption_id:INTEGER*, coupon_id:INTEGER>coupons.coupon_id, order_id:INTEGER>orders.order_id
support_tickets: ticket_id:INTEGER*, customer_id:INTEGER>customer.customer_id, opened_at:TIMESTAMP, topic:TEXT, resolved:BOOLEAN
survey_responses: survey_id:INTEGER*, customer_id:INTEGER>customer.customer_id, answered_on:DATE, nps_score:INTEGER
""",
    },
    {
        "id": "world_atlas",
        "name": "World Atlas",
        "domain_tag": "geography",
        "setting": "medium",
        "description": "Reference atlas of countries, subdivisions, cities, rivers, mountains and border lines.",
        "tables": """
continents: continent_id:INTEGER*, name:TEXT, area_km2:REAL
countries: country_id:INTEGER*, continent_id:INTEGER>continents.continent_id, name:TEXT, iso_code:TEXT, capital_city_id:INTEGER
subdivisions: subdivision_id:INTEGER*, country_id:INTEGER>countries.country_id, name:TEXT, kind:TEXT
cities: city_id:INTEGER*, subdivision_id:INTEGER>subdivisions.subdivision_id, name:TEXT, population:INTEGER, elevation_m:INTEGER
languages: language_id:INTEGER*, name:TEXT, family:TEXT
country_languages: country_id:INTEGER>countries.country_id, language_id:INTEGER>languages.language_id, share_pct:REAL
currencies: currency_code:TEXT*, name:TEXT, symbol:TEXT
country_currencies: country_id:INTEGER>countries.country_id, currency_code:TEXT>currencies.currency_code
rivers: river_id:INTEGER*, name:TEXT, length_km:REAL, mouth:TEXT
river_countries: river_id:INTEGER>rivers.river_id, country_id:INTEGER>countries.country_id
mountains: mountain_id:INTEGER*, country_id:INTEGER>countries.country_id, name:TEXT, height_m:INTEGER
borders: border_id:INTEGER*, country_a:INTEGER>countries.country_id, country_b:INTEGER>countries.country_id, length_km:REAL
""",
    },
    {
        "id": "community_forum",
        "name": "Community Forum",
        "domain_tag": "media",
        "setting": "medium",
        "description": "Hobbyist discussion board for home gardeners: boards, threads, replies, reactions and moderation.",
        "tables": """
users: user_id:INTEGER*, handle:TEXT, joined_on:DATE, country:TEXT, karma:INTEGER
profiles: profile_id:INTEGER*, user_id:INTEGER>users.user_id, bio:TEXT, avatar_url:TEXT
boards: board_id:INTEGER*, title:TEXT, created_on:DATE, is_archived:BOOLEAN
threads: thread_id:INTEGER*, board_id:INTEGER>boards.board_id, user_id:INTEGER>users.user_id, title:TEXT, created_at:TIMESTAMP
posts: post_id:INTEGER*, thread_id:INTEGER>threads.thread_id, user_id:INTEGER>users.user_id, body:TEXT, created_at:TIMESTAMP
comments: comment_id:INTEGER*, post_id:INTEGER>posts.post_id, user_id:INTEGER>users.user_id, body:TEXT, created_at:TIMESTAMP
reactions: reaction_id:INTEGER*, post_id:INTEGER>posts.post_id, user_id:INTEGER>users.user_id, emoji:TEXT
votes: vote_id:INTEGER*, post_id:INTEGER>posts.post_id, user_id:INTEGER>users.user_id, direction:INTEGER
badges: badge_id:INTEGER*, user_id:INTEGER>users.user_id, label:TEXT, earned_on:DATE
hashtags: hashtag_id:INTEGER*, label:TEXT
thread_hashtags: thread_id:INTEGER>threads.thread_id, hashtag_id:INTEGER>hashtags.hashtag_id
attachments: attachment_id:INTEGER*, post_id:INTEGER>posts.post_id, file_name:TEXT, size_kb:INTEGER
moderators: moderator_id:INTEGER*, user_id:INTEGER>users.user_id, board_id:INTEGER>boards.board_id, since:DATE
reports: report_id:INTEGER*, post_id:INTEGER>posts.post_id, reporter_id:INTEGER>users.user_id, reason:TEXT
bans: ban_id:INTEGER*, user_id:INTEGER>users.user_id, moderator_id:INTEGER>moderators.moderator_id, until:DATE
direct_messages: message_id:INTEGER*, sender_id:INTEGER>users.user_id, recipient_id:INTEGER>users.user_id, sent_at:TIMESTAMP
follows: follower_id:INTEGER>users.user_id, followee_id:INTEGER>users.user_id, since:DATE
notifications: notification_id:INTEGER*, user_id:INTEGER>users.user_id, kind:TEXT, created_at:TIMESTAMP, is_read:BOOLEAN
""",
    },
    {
        "id": "football_league",
        "name": "Football League",
        "domain_tag": "sports",
        "setting": "medium",
        "description": "Professional football league: clubs, squads, fixtures, goals, cards and transfer dealings.",
        "tables": """
clubs: club_id:INTEGER*, name:TEXT, city:TEXT, founded:INTEGER, stadium_id:INTEGER>stadiums.stadium_id
stadiums: stadium_id:INTEGER*, name:TEXT, capacity:INTEGER, city:TEXT
footballers: footballer_id:INTEGER*, full_name:TEXT, birth_date:DATE, nationality:TEXT, position:TEXT
squad_memberships: membership_id:INTEGER*, club_id:INTEGER>clubs.club_id, footballer_id:INTEGER>footballers.footballer_id, season:TEXT, shirt_no:INTEGER
referees: referee_id:INTEGER*, full_name:TEXT, since_year:INTEGER
fixtures: fixture_id:INTEGER*, season:TEXT, matchday:INTEGER, home_club_id:INTEGER>clubs.club_id, away_club_id:INTEGER>clubs.club_id, kickoff:TIMESTAMP
fixture_officials: fixture_id:INTEGER>fixtures.fixture_id, referee_id:INTEGER>referees.referee_id, role:TEXT
goals: goal_id:INTEGER*, fixture_id:INTEGER>fixtures.fixture_id, footballer_id:INTEGER>footballers.footballer_id, minute:INTEGER, is_penalty:BOOLEAN
cards: card_id:INTEGER*, fixture_id:INTEGER>fixtures.fixture_id, footballer_id:INTEGER>footballers.footballer_id, colour:TEXT, minute:INTEGER
substitutions: substitution_id:INTEGER*, fixture_id:INTEGER>fixtures.fixture_id, player_in:INTEGER>footballers.footballer_id, player_out:INTEGER>footballers.footballer_id, minute:INTEGER
league_tables: club_id:INTEGER>clubs.club_id, season:TEXT, position:INTEGER, points:INTEGER
transfers: transfer_id:INTEGER*, footballer_id:INTEGER>footballers.footballer_id, from_club_id:INTEGER>clubs.club_id, to_club_id:INTEGER>clubs.club_id, fee_eur:REAL, signed_on:DATE
injuries: injury_id:INTEGER*, footballer_id:INTEGER>footballers.footballer_id, kind:TEXT, start_date:DATE, days_out:INTEGER
""",
    },
    {
        "id": "hr_system",
        "name": "HR System",
        "domain_tag": "business",
        "setting": "medium",
        "description": "Human-resources system of a mid-size manufacturer: staff, payroll, leave, hiring and training.",
        "tables": """
departments: department_id:INTEGER*, name:TEXT, cost_center:TEXT, head_employee_id:INTEGER
employees: employee_id:INTEGER*, department_id:INTEGER>departments.department_id, full_name:TEXT, hired_on:DATE, job_title:TEXT
job_grades: grade_id:INTEGER*, label:TEXT, min_salary:REAL, max_salary:REAL
positions: position_id:INTEGER*, department_id:INTEGER>departments.department_id, grade_id:INTEGER>job_grades.grade_id, title:TEXT
salaries: salary_id:INTEGER*, employee_id:INTEGER>employees.employee_id, amount:REAL, valid_from:DATE
payroll_runs: payroll_run_id:INTEGER*, period:TEXT, paid_on:DATE
payslips: payslip_id:INTEGER*, payroll_run_id:INTEGER>payroll_runs.payroll_run_id, employee_id:INTEGER>employees.employee_id, gross:REAL, net:REAL
leave_requests: leave_id:INTEGER*, employee_id:INTEGER>employees.employee_id, kind:TEXT, start_date:DATE, days:INTEGER, approved:BOOLEAN
trainings: training_id:INTEGER*, title:TEXT, provider:TEXT, hours:INTEGER
training_enrollments: employee_id:INTEGER>employees.employee_id, training_id:INTEGER>trainings.training_id, completed_on:DATE
vacancies: vacancy_id:INTEGER*, position_id:INTEGER>positions.position_id, opened_on:DATE, closed_on:DATE
applicants: applicant_id:INTEGER*, full_name:TEXT, email:TEXT, source:TEXT
applications: application_id:INTEGER*, vacancy_id:INTEGER>vacancies.vacancy_id, applicant_id:INTEGER>applicants.applicant_id, stage:TEXT
performance_reviews: review_id:INTEGER*, employee_id:INTEGER>employees.employee_id, reviewed_on:DATE, rating:INTEGER
benefits: benefit_id:INTEGER*, employee_id:INTEGER>employees.employee_id, kind:TEXT, monthly_value:REAL
""",
    },
    {
        "id": "elections",
        "name": "Election Results",
        "domain_tag": "politics",
        "setting": "medium",
        "description": "Regional and national election returns: districts, candidates, polling stations and tallies.",
        "tables": """
elections: election_id:INTEGER*, level:TEXT, held_on:DATE, turnout_pct:REAL
districts: district_id:INTEGER*, name:TEXT, region:TEXT, registered_voters:INTEGER
polling_stations: station_id:INTEGER*, district_id:INTEGER>districts.district_id, address:TEXT, capacity:INTEGER
political_parties: party_id:INTEGER*, name:TEXT, colour:TEXT
candidates: candidate_id:INTEGER*, full_name:TEXT, party_id:INTEGER>political_parties.party_id, birth_year:INTEGER
candidacies: candidacy_id:INTEGER*, election_id:INTEGER>elections.election_id, candidate_id:INTEGER>candidates.candidate_id, district_id:INTEGER>districts.district_id
tallies: tally_id:INTEGER*, station_id:INTEGER>polling_stations.station_id, candidacy_id:INTEGER>candidacies.candidacy_id, votes:INTEGER
party_lists: list_id:INTEGER*, election_id:INTEGER>elections.election_id, party_id:INTEGER>political_parties.party_id, list_votes:INTEGER
seat_allocations: allocation_id:INTEGER*, list_id:INTEGER>party_lists.list_id, seats:INTEGER
campaign_donations: donation_id:INTEGER*, party_id:INTEGER>political_parties.party_id, donor:TEXT, amount:REAL, received_on:DATE
opinion_polls: poll_id:INTEGER*, pollster:TEXT, fielded_on:DATE, sample_size:INTEGER
poll_figures: poll_id:INTEGER>opinion_polls.poll_id, party_id:INTEGER>political_parties.party_id, share_pct:REAL
observers: observer_id:INTEGER*, organisation:TEXT, station_id:INTEGER>polling_stations.station_id
complaints: complaint_id:INTEGER*, station_id:INTEGER>polling_stations.station_id, filed_on:DATE, category:TEXT, upheld:BOOLEAN
""",
    },
    # ------------------------------------------------------------- large
    {
        "id": "olympics",
        "name": "Olympic Games",
        "domain_tag": "sports",
        "setting": "large",
        "description": "Summer and winter Olympic Games: host cities, athletes, disciplines, heats and medal tables.",
        "tables": """
games: games_id:INTEGER*, year:INTEGER, season:TEXT, host_city:TEXT
nations: nation_id:INTEGER*, noc_code:TEXT, name:TEXT
athletes: athlete_id:INTEGER*, full_name:TEXT, sex:TEXT, birth_year:INTEGER, nation_id:INTEGER>nations.nation_id
sports: sport_id:INTEGER*, name:TEXT, is_team_sport:BOOLEAN
disciplines: discipline_id:INTEGER*, sport_id:INTEGER>sports.sport_id, name:TEXT
events: event_id:INTEGER*, games_id:INTEGER>games.games_id, discipline_id:INTEGER>disciplines.discipline_id, name:TEXT, gender:TEXT
venues: venue_id:INTEGER*, games_id:INTEGER>games.games_id, name:TEXT, capacity:INTEGER
sessions: session_id:INTEGER*, event_id:INTEGER>events.event_id, venue_id:INTEGER>venues.venue_id, starts_at:TIMESTAMP
heats: heat_id:INTEGER*, event_id:INTEGER>events.event_id, round:TEXT, heat_no:INTEGER
heat_results: heat_id:INTEGER>heats.heat_id, athlete_id:INTEGER>athletes.athlete_id, rank:INTEGER, mark:TEXT
medals: medal_id:INTEGER*, event_id:INTEGER>events.event_id, athlete_id:INTEGER>athletes.athlete_id, medal:TEXT
olympic_teams: team_id:INTEGER*, nation_id:INTEGER>nations.nation_id, event_id:INTEGER>events.event_id
team_members: team_id:INTEGER>olympic_teams.team_id, athlete_id:INTEGER>athletes.athlete_id
records: record_id:INTEGER*, discipline_id:INTEGER>disciplines.discipline_id, athlete_id:INTEGER>athletes.athlete_id, mark:TEXT, set_on:DATE
doping_cases: case_id:INTEGER*, athlete_id:INTEGER>athletes.athlete_id, substance:TEXT, decided_on:DATE
torch_relay_legs: leg_id:INTEGER*, games_id:INTEGER>games.games_id, city:TEXT, runner:TEXT
volunteers: volunteer_id:INTEGER*, games_id:INTEGER>games.games_id, full_name:TEXT, role:TEXT
broadcast_rights: right_id:INTEGER*, games_id:INTEGER>games.games_id, broadcaster:TEXT, territory:TEXT, fee_usd:REAL
""",
    },
    {
        "id": "transit_network",
        "name": "Transit Network",
        "domain_tag": "geography",
        "setting": "large",
        "description": "Metropolitan public transport network: lines, stops, timetables, vehicles and ridership.",
        "tables": """
agencies: agency_id:INTEGER*, name:TEXT, timezone:TEXT
zones: zone_id:INTEGER*, label:TEXT, base_fare:REAL
stops: stop_id:INTEGER*, zone_id:INTEGER>zones.zone_id, name:TEXT, lat:REAL, lon:REAL, wheelchair:BOOLEAN
lines: line_id:INTEGER*, agency_id:INTEGER>agencies.agency_id, short_name:TEXT, mode:TEXT, colour:TEXT
line_variants: variant_id:INTEGER*, line_id:INTEGER>lines.line_id, headsign:TEXT, direction:INTEGER
variant_stops: variant_id:INTEGER>line_variants.variant_id, stop_id:INTEGER>stops.stop_id, sequence:INTEGER
service_calendars: calendar_id:INTEGER*, label:TEXT, start_date:DATE, end_date:DATE
trips: trip_id:INTEGER*, variant_id:INTEGER>line_variants.variant_id, calendar_id:INTEGER>service_calendars.calendar_id, departs_at:TEXT
stop_times: trip_id:INTEGER>trips.trip_id, stop_id:INTEGER>stops.stop_id, arrival:TEXT, departure:TEXT
depots: depot_id:INTEGER*, name:TEXT, capacity:INTEGER
fleet_vehicles: vehicle_id:INTEGER*, depot_id:INTEGER>depots.depot_id, model:TEXT, seats:INTEGER, in_service_since:DATE
vehicle_assignments: assignment_id:INTEGER*, vehicle_id:INTEGER>fleet_vehicles.vehicle_id, trip_id:INTEGER>trips.trip_id, service_date:DATE
fare_products: product_id:INTEGER*, label:TEXT, price:REAL, validity_min:INTEGER
ticket_validations: validation_id:INTEGER*, stop_id:INTEGER>stops.stop_id, product_id:INTEGER>fare_products.product_id, validated_at:TIMESTAMP
disruptions: disruption_id:INTEGER*, line_id:INTEGER>lines.line_id, starts_at:TIMESTAMP, cause:TEXT
ridership_counts: count_id:INTEGER*, stop_id:INTEGER>stops.stop_id, service_date:DATE, boardings:INTEGER, alightings:INTEGER
""",
    },
    {
        "id": "logistics",
        "name": "Logistics Operations",
        "domain_tag": "business",
        "setting": "large",
        "description": "Freight forwarding operations: warehouses, shipments, parcels, carriers and delivery scans.",
        "tables": """
warehouses: warehouse_id:INTEGER*, name:TEXT, city:TEXT, capacity_pallets:INTEGER
carriers: carrier_id:INTEGER*, name:TEXT, mode:TEXT
shippers: shipper_id:INTEGER*, company:TEXT, country:TEXT
consignees: consignee_id:INTEGER*, company:TEXT, city:TEXT, country:TEXT
shipments: shipment_id:INTEGER*, shipper_id:INTEGER>shippers.shipper_id, consignee_id:INTEGER>consignees.consignee_id, carrier_id:INTEGER>carriers.carrier_id, booked_on:DATE
parcels: parcel_id:INTEGER*, shipment_id:INTEGER>shipments.shipment_id, weight_kg:REAL, volume_m3:REAL
scans: scan_id:INTEGER*, parcel_id:INTEGER>parcels.parcel_id, warehouse_id:INTEGER>warehouses.warehouse_id, scanned_at:TIMESTAMP, event:TEXT
routes: route_id:INTEGER*, origin_warehouse_id:INTEGER>warehouses.warehouse_id, dest_warehouse_id:INTEGER>warehouses.warehouse_id, distance_km:REAL
trucks: truck_id:INTEGER*, carrier_id:INTEGER>carriers.carrier_id, plate:TEXT, payload_t:REAL
truck_runs: run_id:INTEGER*, truck_id:INTEGER>trucks.truck_id, route_id:INTEGER>routes.route_id, departed_at:TIMESTAMP
freight_invoices: invoice_id:INTEGER*, shipment_id:INTEGER>shipments.shipment_id, amount:REAL, currency:TEXT, issued_on:DATE
customs_declarations: declaration_id:INTEGER*, shipment_id:INTEGER>shipments.shipment_id, hs_code:TEXT, declared_value:REAL
damage_claims: claim_id:INTEGER*, parcel_id:INTEGER>parcels.parcel_id, filed_on:DATE, amount:REAL
delivery_attempts: attempt_id:INTEGER*, parcel_id:INTEGER>parcels.parcel_id, attempted_at:TIMESTAMP, successful:BOOLEAN
""",
    },
    {
        "id": "banking",
        "name": "Retail Banking",
        "domain_tag": "business",
        "setting": "large",
        "description": "Retail bank core data: clients, accounts, cards, loans, payments and risk assessments.",
        "tables": """
branches: branch_id:INTEGER*, name:TEXT, city:TEXT, opened_on:DATE
clients: client_id:INTEGER*, full_name:TEXT, birth_date:DATE, segment:TEXT, branch_id:INTEGER>branches.branch_id
client_addresses: address_id:INTEGER*, client_id:INTEGER>clients.client_id, city:TEXT, postcode:TEXT
account_types: account_type_id:INTEGER*, label:TEXT, interest_rate:REAL
accounts: account_id:INTEGER*, client_id:INTEGER>clients.client_id, account_type_id:INTEGER>account_types.account_type_id, iban:TEXT, opened_on:DATE
balances: account_id:INTEGER>accounts.account_id, as_of:DATE, balance:REAL
cards: card_id:INTEGER*, account_id:INTEGER>accounts.account_id, network:TEXT, expires_on:DATE, is_credit:BOOLEAN
card_payments: card_payment_id:INTEGER*, card_id:INTEGER>cards.card_id, merchant_id:INTEGER>merchants.merchant_id, amount:REAL, paid_at:TIMESTAMP
merchants: merchant_id:INTEGER*, name:TEXT, mcc:TEXT, country:TEXT
transfers: transfer_id:INTEGER*, from_account_id:INTEGER>accounts.account_id, to_iban:TEXT, amount:REAL, executed_at:TIMESTAMP
standing_orders: order_id:INTEGER*, account_id:INTEGER>accounts.account_id, to_iban:TEXT, amount:REAL, day_of_month:INTEGER
loan_products: loan_product_id:INTEGER*, label:TEXT, base_rate:REAL
loans: loan_id:INTEGER*, client_id:INTEGER>clients.client_id, loan_product_id:INTEGER>loan_products.loan_product_id, principal:REAL, started_on:DATE
loan_installments: installment_id:INTEGER*, loan_id:INTEGER>loans.loan_id, due_on:DATE, amount:REAL, paid:BOOLEAN
collateral: collateral_id:INTEGER*, loan_id:INTEGER>loans.loan_id, kind:TEXT, appraised_value:REAL
credit_scores: score_id:INTEGER*, client_id:INTEGER>clients.client_id, scored_on:DATE, score:INTEGER
risk_assessments: assessment_id:INTEGER*, client_id:INTEGER>clients.client_id, assessed_on:DATE, risk_class:TEXT
fraud_alerts: alert_id:INTEGER*, card_payment_id:INTEGER>card_payments.card_payment_id, raised_at:TIMESTAMP, confirmed:BOOLEAN
atm_machines: atm_id:INTEGER*, branch_id:INTEGER>branches.branch_id, city:TEXT
atm_withdrawals: withdrawal_id:INTEGER*, atm_id:INTEGER>atm_machines.atm_id, card_id:INTEGER>cards.card_id, amount:REAL, withdrawn_at:TIMESTAMP
""",
    },
    {
        "id": "climate_stations",
        "name": "Climate Stations",
        "domain_tag": "geography",
        "setting": "large",
        "description": "Network of weather and climate stations: sensors, hourly readings, extremes and maintenance.",
        "tables": """
regions: region_id:INTEGER*, name:TEXT, climate_zone:TEXT
stations: station_id:INTEGER*, region_id:INTEGER>regions.region_id, name:TEXT, lat:REAL, lon:REAL, elevation_m:INTEGER
station_operators: operator_id:INTEGER*, name:TEXT, country:TEXT
station_operation: station_id:INTEGER>stations.station_id, operator_id:INTEGER>station_operators.operator_id, since:DATE
sensor_models: sensor_model_id:INTEGER*, vendor:TEXT, quantity:TEXT, accuracy:REAL
sensors: sensor_id:INTEGER*, station_id:INTEGER>stations.station_id, sensor_model_id:INTEGER>sensor_models.sensor_model_id, installed_on:DATE
hourly_readings: sensor_id:INTEGER>sensors.sensor_id, observed_at:TIMESTAMP, value:REAL, quality_flag:TEXT
daily_summaries: station_id:INTEGER>stations.station_id, day:DATE, t_min:REAL, t_max:REAL, precip_mm:REAL
monthly_normals: station_id:INTEGER>stations.station_id, month:INTEGER, t_mean:REAL, precip_mm:REAL
extreme_events: extreme_id:INTEGER*, station_id:INTEGER>stations.station_id, kind:TEXT, observed_on:DATE, magnitude:REAL
snow_depths: station_id:INTEGER>stations.station_id, day:DATE, depth_cm:INTEGER
maintenance_visits: visit_id:INTEGER*, station_id:INTEGER>stations.station_id, visited_on:DATE, technician:TEXT
calibrations: calibration_id:INTEGER*, sensor_id:INTEGER>sensors.sensor_id, calibrated_on:DATE, offset_value:REAL
data_gaps: gap_id:INTEGER*, sensor_id:INTEGER>sensors.sensor_id, gap_start:TIMESTAMP, gap_end:TIMESTAMP
forecast_verifications: verification_id:INTEGER*, station_id:INTEGER>stations.station_id, valid_on:DATE, forecast_t:REAL, observed_t:REAL
""",
    },
    {
        "id": "public_budget",
        "name": "Public Budget",
        "domain_tag": "politics",
        "setting": "large",
        "description": "Municipal budget and procurement ledger: ministries, programmes, appropriations and tenders.",
        "tables": """
fiscal_years: fiscal_year_id:INTEGER*, label:TEXT, start_date:DATE, end_date:DATE
ministries: ministry_id:INTEGER*, name:TEXT, minister:TEXT
agencies_public: agency_id:INTEGER*, ministry_id:INTEGER>ministries.ministry_id, name:TEXT
programmes: programme_id:INTEGER*, agency_id:INTEGER>agencies_public.agency_id, title:TEXT, policy_goal:TEXT
budget_lines: line_id:INTEGER*, programme_id:INTEGER>programmes.programme_id, fiscal_year_id:INTEGER>fiscal_years.fiscal_year_id, economic_code:TEXT
appropriations: appropriation_id:INTEGER*, line_id:INTEGER>budget_lines.line_id, amount:REAL, approved_on:DATE
amendments: amendment_id:INTEGER*, appropriation_id:INTEGER>appropriations.appropriation_id, delta:REAL, reason:TEXT
expenditures: expenditure_id:INTEGER*, line_id:INTEGER>budget_lines.line_id, paid_on:DATE, amount:REAL
revenues: revenue_id:INTEGER*, fiscal_year_id:INTEGER>fiscal_years.fiscal_year_id, source:TEXT, amount:REAL
vendors: vendor_id:INTEGER*, name:TEXT, registration_no:TEXT, city:TEXT
tenders: tender_id:INTEGER*, agency_id:INTEGER>agencies_public.agency_id, title:TEXT, published_on:DATE, estimated_value:REAL
bids: bid_id:INTEGER*, tender_id:INTEGER>tenders.tender_id, vendor_id:INTEGER>vendors.vendor_id, amount:REAL
contracts: contract_id:INTEGER*, tender_id:INTEGER>tenders.tender_id, vendor_id:INTEGER>vendors.vendor_id, signed_on:DATE, value:REAL
audits: audit_id:INTEGER*, agency_id:INTEGER>agencies_public.agency_id, completed_on:DATE, opinion:TEXT
audit_findings: finding_id:INTEGER*, audit_id:INTEGER>audits.audit_id, severity:TEXT, summary:TEXT
grants: grant_id:INTEGER*, programme_id:INTEGER>programmes.programme_id, recipient:TEXT, amount:REAL
debt_issues: debt_id:INTEGER*, fiscal_year_id:INTEGER>fiscal_years.fiscal_year_id, instrument:TEXT, principal:REAL, coupon_pct:REAL
""",
    },
    {
        "id": "streaming_catalog",
        "name": "Streaming Catalog",
        "domain_tag": "media",
        "setting": "large",
        "description": "Video streaming service catalogue: titles, episodes, cast, subscriptions and viewing sessions.",
        "tables": """
titles: title_id:INTEGER*, name:TEXT, kind:TEXT, release_year:INTEGER, age_rating:TEXT
genres: genre_id:INTEGER*, label:TEXT
title_genres: title_id:INTEGER>titles.title_id, genre_id:INTEGER>genres.genre_id
episodes_tv: episode_id:INTEGER*, title_id:INTEGER>titles.title_id, season_no:INTEGER, episode_no:INTEGER, runtime_min:INTEGER
people: person_id:INTEGER*, full_name:TEXT, birth_year:INTEGER
cast_credits: title_id:INTEGER>titles.title_id, person_id:INTEGER>people.person_id, role:TEXT, billing_order:INTEGER
subscribers: subscriber_id:INTEGER*, email:TEXT, country:TEXT, joined_on:DATE
plans: plan_id:INTEGER*, label:TEXT, monthly_price:REAL, max_streams:INTEGER
subscriptions: subscription_id:INTEGER*, subscriber_id:INTEGER>subscribers.subscriber_id, plan_id:INTEGER>plans.plan_id, started_on:DATE, cancelled_on:DATE
viewing_sessions: session_id:INTEGER*, subscriber_id:INTEGER>subscribers.subscriber_id, title_id:INTEGER>titles.title_id, started_at:TIMESTAMP, minutes:INTEGER
ratings: subscriber_id:INTEGER>subscribers.subscriber_id, title_id:INTEGER>titles.title_id, stars:INTEGER, rated_on:DATE
licensing_deals: deal_id:INTEGER*, title_id:INTEGER>titles.title_id, studio:TEXT, territory:TEXT, expires_on:DATE
watchlists: subscriber_id:INTEGER>subscribers.subscriber_id, title_id:INTEGER>titles.title_id, added_on:DATE
""",
    },
    {
        "id": "tennis_tour",
        "name": "Tennis Tour",
        "domain_tag": "sports",
        "setting": "large",
        "description": "Professional tennis tour: tournaments, draws, matches, set scores, rankings and prize money.",
        "tables": """
players: player_id:INTEGER*, full_name:TEXT, hand:TEXT, birth_date:DATE, country:TEXT, height_cm:INTEGER
coaches: coach_id:INTEGER*, full_name:TEXT, country:TEXT
player_coaches: player_id:INTEGER>players.player_id, coach_id:INTEGER>coaches.coach_id, since:DATE
tournaments: tournament_id:INTEGER*, name:TEXT, city:TEXT, surface:TEXT, category:TEXT
editions: edition_id:INTEGER*, tournament_id:INTEGER>tournaments.tournament_id, year:INTEGER, draw_size:INTEGER
courts: court_id:INTEGER*, tournament_id:INTEGER>tournaments.tournament_id, name:TEXT, capacity:INTEGER
draws: draw_id:INTEGER*, edition_id:INTEGER>editions.edition_id, event:TEXT
seeds: draw_id:INTEGER>draws.draw_id, player_id:INTEGER>players.player_id, seed:INTEGER
matches: match_id:INTEGER*, draw_id:INTEGER>draws.draw_id, round:TEXT, court_id:INTEGER>courts.court_id, winner_id:INTEGER>players.player_id, loser_id:INTEGER>players.player_id
set_scores: match_id:INTEGER>matches.match_id, set_no:INTEGER, winner_games:INTEGER, loser_games:INTEGER, tiebreak:BOOLEAN
match_stats: match_id:INTEGER>matches.match_id, player_id:INTEGER>players.player_id, aces:INTEGER, double_faults:INTEGER, first_serve_pct:REAL
rankings: ranking_date:DATE, player_id:INTEGER>players.player_id, position:INTEGER, points:INTEGER
prize_money: edition_id:INTEGER>editions.edition_id, round:TEXT, amount_usd:REAL
player_earnings: player_id:INTEGER>players.player_id, edition_id:INTEGER>editions.edition_id, amount_usd:REAL
umpires: umpire_id:INTEGER*, full_name:TEXT, badge:TEXT
match_umpires: match_id:INTEGER>matches.match_id, umpire_id:INTEGER>umpires.umpire_id
racquet_sponsors: sponsor_id:INTEGER*, brand:TEXT
player_sponsorships: player_id:INTEGER>players.player_id, sponsor_id:INTEGER>racquet_sponsors.sponsor_id, annual_value:REAL
withdrawals: withdrawal_id:INTEGER*, edition_id:INTEGER>editions.edition_id, player_id:INTEGER>players.player_id, reason:TEXT
""",
    },
    {
        "id": "news_publishing",
        "name": "News Publishing",
        "domain_tag": "media",
        "setting": "large",
        "description": "Newsroom content system of a daily paper: articles, authors, sections, revisions and readership.",
        "tables": """
sections: section_id:INTEGER*, name:TEXT, editor:TEXT
journalists: journalist_id:INTEGER*, full_name:TEXT, desk:TEXT, hired_on:DATE
stories: story_id:INTEGER*, section_id:INTEGER>sections.section_id, headline:TEXT, published_at:TIMESTAMP, word_count:INTEGER
story_bylines: story_id:INTEGER>stories.story_id, journalist_id:INTEGER>journalists.journalist_id
revisions: revision_id:INTEGER*, story_id:INTEGER>stories.story_id, revised_at:TIMESTAMP, editor:TEXT
tags: tag_id:INTEGER*, label:TEXT
story_tags: story_id:INTEGER>stories.story_id, tag_id:INTEGER>tags.tag_id
photos: photo_id:INTEGER*, story_id:INTEGER>stories.story_id, photographer:TEXT, caption:TEXT
page_views: story_id:INTEGER>stories.story_id, day:DATE, views:INTEGER, avg_read_sec:REAL
reader_comments: comment_id:INTEGER*, story_id:INTEGER>stories.story_id, author_alias:TEXT, posted_at:TIMESTAMP, approved:BOOLEAN
corrections: correction_id:INTEGER*, story_id:INTEGER>stories.story_id, issued_on:DATE, note:TEXT
newsletters: newsletter_id:INTEGER*, name:TEXT, sent_on:DATE, recipients:INTEGER
""",
    },
    {
        "id": "national_parks",
        "name": "National Parks",
        "domain_tag": "geography",
        "setting": "large",
        "description": "National park service inventory: parks, trails, campsites, wildlife sightings and visitor permits.",
        "tables": """
parks: park_id:INTEGER*, name:TEXT, state:TEXT, established:INTEGER, area_km2:REAL
park_units: unit_id:INTEGER*, park_id:INTEGER>parks.park_id, name:TEXT, kind:TEXT
trails: trail_id:INTEGER*, park_id:INTEGER>parks.park_id, name:TEXT, length_km:REAL, difficulty:TEXT
trail_conditions: trail_id:INTEGER>trails.trail_id, reported_on:DATE, status:TEXT
campsites: campsite_id:INTEGER*, park_id:INTEGER>parks.park_id, name:TEXT, pitches:INTEGER, has_water:BOOLEAN
campsite_bookings: booking_id:INTEGER*, campsite_id:INTEGER>campsites.campsite_id, arrival:DATE, nights:INTEGER, party_size:INTEGER
species: species_id:INTEGER*, common_name:TEXT, scientific_name:TEXT, conservation_status:TEXT
wildlife_sightings: sighting_id:INTEGER*, park_id:INTEGER>parks.park_id, species_id:INTEGER>species.species_id, seen_on:DATE, count:INTEGER
rangers: ranger_id:INTEGER*, park_id:INTEGER>parks.park_id, full_name:TEXT, since:DATE
ranger_patrols: patrol_id:INTEGER*, ranger_id:INTEGER>rangers.ranger_id, trail_id:INTEGER>trails.trail_id, patrolled_on:DATE
visitor_permits: permit_id:INTEGER*, park_id:INTEGER>parks.park_id, kind:TEXT, issued_on:DATE, fee:REAL
visitor_counts: park_id:INTEGER>parks.park_id, month:TEXT, visitors:INTEGER
wildfires: fire_id:INTEGER*, park_id:INTEGER>parks.park_id, started_on:DATE, area_ha:REAL
rescue_incidents: incident_id:INTEGER*, park_id:INTEGER>parks.park_id, trail_id:INTEGER>trails.trail_id, occurred_on:DATE, outcome:TEXT
visitor_centers: center_id:INTEGER*, park_id:INTEGER>parks.park_id, name:TEXT, opened:INTEGER
geology_features: feature_id:INTEGER*, park_id:INTEGER>parks.park_id, name:TEXT, kind:TEXT
""",
    },
]
