"""Benchmark questions with gold SQL: 20 per materialized database, half
single-table ("simple"), half multi-table ("complex")."""

from __future__ import annotations

# (db_id, difficulty, question, gold_sql)
TASK_DEFS: list[tuple[str, str, str, str]] = [
    # ----------------------------------------------------------------- f1
    ("f1", "simple", "How many Formula 1 races were there in 2015?",
     "SELECT COUNT(*) FROM races WHERE year = 2015"),
    ("f1", "simple", "Tell me 3 Formula 1 drivers from Germany, ordered by driver id.",
     "SELECT forename, surname FROM drivers WHERE nationality = 'German' ORDER BY driver_id LIMIT 3"),
    ("f1", "simple", "How many drivers are recorded in the Formula 1 data?",
     "SELECT COUNT(*) FROM drivers"),
    ("f1", "simple", "Which country hosts the most Formula 1 circuits?",
     "SELECT country FROM circuits GROUP BY country ORDER BY COUNT(*) DESC, country LIMIT 1"),
    ("f1", "simple", "Which country has the most Formula 1 drivers?",
     "SELECT nationality FROM drivers GROUP BY nationality ORDER BY COUNT(*) DESC, nationality LIMIT 1"),
    ("f1", "simple", "What was the name of the first Formula 1 race of the 2020 season?",
     "SELECT name FROM races WHERE year = 2020 ORDER BY round LIMIT 1"),
    ("f1", "simple", "How many Formula 1 constructors are British?",
     "SELECT COUNT(*) FROM constructors WHERE nationality = 'British'"),
    ("f1", "simple", "In which year were the most Formula 1 races held?",
     "SELECT year FROM races GROUP BY year ORDER BY COUNT(*) DESC, year LIMIT 1"),
    ("f1", "simple", "Who is the oldest Formula 1 driver?",
     "SELECT forename, surname FROM drivers ORDER BY dob LIMIT 1"),
    ("f1", "simple", "How many Formula 1 race entries ended with an engine failure?",
     "SELECT COUNT(*) FROM results WHERE status = 'Engine'"),
    ("f1", "complex", "Which driver has the most wins in Formula 1?",
     "SELECT d.forename, d.surname FROM results r JOIN drivers d ON d.driver_id = r.driver_id "
     "WHERE r.position_order = 1 GROUP BY d.driver_id ORDER BY COUNT(*) DESC, d.driver_id LIMIT 1"),
    ("f1", "complex", "How many Formula 1 races were held at circuits in Italy?",
     "SELECT COUNT(*) FROM races ra JOIN circuits c ON c.circuit_id = ra.circuit_id WHERE c.country = 'Italy'"),
    ("f1", "complex", "Which Formula 1 constructor scored the most points in 2018?",
     "SELECT co.name FROM constructor_results cr JOIN races ra ON ra.race_id = cr.race_id "
     "JOIN constructors co ON co.constructor_id = cr.constructor_id WHERE ra.year = 2018 "
     "GROUP BY co.constructor_id ORDER BY SUM(cr.points) DESC, co.constructor_id LIMIT 1"),
    ("f1", "complex", "Who won the last Formula 1 race of 2021?",
     "SELECT d.forename, d.surname FROM results r JOIN races ra ON ra.race_id = r.race_id "
     "JOIN drivers d ON d.driver_id = r.driver_id WHERE ra.year = 2021 AND r.position_order = 1 "
     "AND ra.round = (SELECT MAX(round) FROM races WHERE year = 2021)"),
    ("f1", "complex", "How many different drivers won at least one Formula 1 race in 2016?",
     "SELECT COUNT(DISTINCT r.driver_id) FROM results r JOIN races ra ON ra.race_id = r.race_id "
     "WHERE ra.year = 2016 AND r.position_order = 1"),
    ("f1", "complex", "Which Formula 1 circuit hosted the most races?",
     "SELECT c.name FROM races ra JOIN circuits c ON c.circuit_id = ra.circuit_id "
     "GROUP BY c.circuit_id ORDER BY COUNT(*) DESC, c.circuit_id LIMIT 1"),
    ("f1", "complex", "Which constructor did the driver on pole position for the first race of 2022 drive for?",
     "SELECT co.name FROM qualifying q JOIN races ra ON ra.race_id = q.race_id "
     "JOIN constructors co ON co.constructor_id = q.constructor_id "
     "WHERE ra.year = 2022 AND ra.round = 1 AND q.position = 1"),
    ("f1", "complex", "How many championship points have German drivers scored in total in Formula 1 races?",
     "SELECT SUM(r.points) FROM results r JOIN drivers d ON d.driver_id = r.driver_id WHERE d.nationality = 'German'"),
    ("f1", "complex", "Who led the Formula 1 drivers' standings after the last race of 2017?",
     "SELECT d.forename, d.surname FROM standings s JOIN races ra ON ra.race_id = s.race_id "
     "JOIN drivers d ON d.driver_id = s.driver_id WHERE ra.year = 2017 AND s.position = 1 "
     "AND ra.round = (SELECT MAX(round) FROM races WHERE year = 2017)"),
    ("f1", "complex", "How many Formula 1 races did British drivers win in 2012?",
     "SELECT COUNT(*) FROM results r JOIN races ra ON ra.race_id = r.race_id "
     "JOIN drivers d ON d.driver_id = r.driver_id WHERE ra.year = 2012 AND r.position_order = 1 "
     "AND d.nationality = 'British'"),
    # -------------------------------------------------------------- avito
    ("avito", "simple", "How many users does Avito have?",
     "SELECT COUNT(*) FROM UserInfo"),
    ("avito", "simple", "Give me the latest search query on Avito.",
     "SELECT SearchQuery FROM SearchInfo ORDER BY SearchDate DESC LIMIT 1"),
    ("avito", "simple", "How many searches did Avito have on April 28, 2015?",
     "SELECT COUNT(*) FROM SearchInfo WHERE date(SearchDate) = '2015-04-28'"),
    ("avito", "simple", "What is the title of the cheapest ad on Avito?",
     "SELECT Title FROM AdsInfo WHERE Price IS NOT NULL ORDER BY Price, AdID LIMIT 1"),
    ("avito", "simple", "How many Avito ads are contextual ads?",
     "SELECT COUNT(*) FROM AdsInfo WHERE IsContext = 1"),
    ("avito", "simple", "How many top-level categories does Avito have?",
     "SELECT COUNT(*) FROM Category WHERE Level = 1"),
    ("avito", "simple", "What is the average price of an Avito ad?",
     "SELECT AVG(Price) FROM AdsInfo"),
    ("avito", "simple", "How many Avito searches were made by logged-in users?",
     "SELECT COUNT(*) FROM SearchInfo WHERE IsUserLoggedOn = 1"),
    ("avito", "simple", "How many phone number requests were recorded on Avito?",
     "SELECT COUNT(*) FROM PhoneRequestsStream"),
    ("avito", "simple", "How many ads shown in Avito search streams were clicked?",
     "SELECT COUNT(*) FROM SearchStream WHERE IsClick = 1"),
    ("avito", "complex", "How many Avito ads belong to categories of level 3?",
     "SELECT COUNT(*) FROM AdsInfo a JOIN Category c ON c.CategoryID = a.CategoryID WHERE c.Level = 3"),
    ("avito", "complex", "What is the title of the most visited ad on Avito?",
     "SELECT a.Title FROM VisitStream v JOIN AdsInfo a ON a.AdID = v.AdID "
     "GROUP BY a.AdID ORDER BY COUNT(*) DESC, a.AdID LIMIT 1"),
    ("avito", "complex", "How many ads were shown in Avito searches made on May 1, 2015?",
     "SELECT COUNT(*) FROM SearchStream ss JOIN SearchInfo si ON si.SearchID = ss.SearchID "
     "WHERE date(si.SearchDate) = '2015-05-01'"),
    ("avito", "complex", "Which region id has the most Avito ads?",
     "SELECT l.RegionID FROM AdsInfo a JOIN Location l ON l.LocationID = a.LocationID "
     "GROUP BY l.RegionID ORDER BY COUNT(*) DESC, l.RegionID LIMIT 1"),
    ("avito", "complex", "What is the average price of Avito ads that were clicked in a search stream?",
     "SELECT AVG(a.Price) FROM SearchStream ss JOIN AdsInfo a ON a.AdID = ss.AdID WHERE ss.IsClick = 1"),
    ("avito", "complex", "How many distinct Avito users requested a phone number for an ad priced above 1000?",
     "SELECT COUNT(DISTINCT p.UserID) FROM PhoneRequestsStream p JOIN AdsInfo a ON a.AdID = p.AdID WHERE a.Price > 1000"),
    ("avito", "complex", "Which user device id made the most searches on Avito?",
     "SELECT u.UserDeviceID FROM SearchInfo s JOIN UserInfo u ON u.UserID = s.UserID "
     "GROUP BY u.UserDeviceID ORDER BY COUNT(*) DESC, u.UserDeviceID LIMIT 1"),
    ("avito", "complex", "How many Avito ads are in subcategories whose parent category is 1?",
     "SELECT COUNT(*) FROM AdsInfo a JOIN Category c ON c.CategoryID = a.CategoryID WHERE c.ParentCategoryID = 1"),
    ("avito", "complex", "How many Avito searches were made from city-level locations?",
     "SELECT COUNT(*) FROM SearchInfo s JOIN Location l ON l.LocationID = s.LocationID WHERE l.Level = 3"),
    ("avito", "complex", "What is the title of the Avito ad with the most phone requests?",
     "SELECT a.Title FROM PhoneRequestsStream p JOIN AdsInfo a ON a.AdID = p.AdID "
     "GROUP BY a.AdID ORDER BY COUNT(*) DESC, a.AdID LIMIT 1"),
    # -------------------------------------------------------------- trial
    ("trial", "simple", "How many clinical studies are available?",
     "SELECT COUNT(*) FROM studies"),
    ("trial", "simple", "Give me the titles of the 2 most recent clinical trials.",
     "SELECT brief_title FROM studies ORDER BY start_date DESC LIMIT 2"),
    ("trial", "simple", "Give me the title of the oldest medical study.",
     "SELECT brief_title FROM studies ORDER BY start_date LIMIT 1"),
    ("trial", "simple", "Name 3 clinical trial sponsors, ordered by sponsor id.",
     "SELECT name FROM sponsors ORDER BY sponsor_id LIMIT 3"),
    ("trial", "simple", "How many clinical trials are in phase 3?",
     "SELECT COUNT(*) FROM studies WHERE phase = 'Phase 3'"),
    ("trial", "simple", "How many clinical trials were withdrawn?",
     "SELECT COUNT(*) FROM studies WHERE overall_status = 'Withdrawn'"),
    ("trial", "simple", "What is the largest enrollment of any clinical trial?",
     "SELECT MAX(enrollment) FROM studies"),
    ("trial", "simple", "How many clinical trial facilities are located in Germany?",
     "SELECT COUNT(*) FROM facilities WHERE country = 'Germany'"),
    ("trial", "simple", "How many distinct medical conditions are recorded for clinical trials?",
     "SELECT COUNT(*) FROM conditions"),
    ("trial", "simple", "How many clinical trial sponsors are from industry?",
     "SELECT COUNT(*) FROM sponsors WHERE agency_class = 'Industry'"),
    ("trial", "complex", "Which sponsor leads the most clinical trials?",
     "SELECT sp.name FROM sponsors_studies ss JOIN sponsors sp ON sp.sponsor_id = ss.sponsor_id "
     "WHERE ss.lead_or_collaborator = 'lead' GROUP BY sp.sponsor_id ORDER BY COUNT(*) DESC, sp.sponsor_id LIMIT 1"),
    ("trial", "complex", "How many clinical trials study diabetes mellitus?",
     "SELECT COUNT(DISTINCT cs.nct_id) FROM conditions_studies cs JOIN conditions c ON c.condition_id = cs.condition_id "
     "WHERE c.mesh_term = 'Diabetes Mellitus'"),
    ("trial", "complex", "What is the title of the clinical trial run at the most facilities?",
     "SELECT s.brief_title FROM facilities_studies fs JOIN studies s ON s.nct_id = fs.nct_id "
     "GROUP BY s.nct_id ORDER BY COUNT(*) DESC, s.nct_id LIMIT 1"),
    ("trial", "complex", "How many clinical trials have a facility in Berlin?",
     "SELECT COUNT(DISTINCT fs.nct_id) FROM facilities_studies fs JOIN facilities f ON f.facility_id = fs.facility_id "
     "WHERE f.city = 'Berlin'"),
    ("trial", "complex", "Which intervention is used in the most clinical trials?",
     "SELECT i.mesh_term FROM interventions_studies x JOIN interventions i ON i.intervention_id = x.intervention_id "
     "GROUP BY i.intervention_id ORDER BY COUNT(*) DESC, i.intervention_id LIMIT 1"),
    ("trial", "complex", "How many randomized phase 2 clinical trials are there?",
     "SELECT COUNT(*) FROM studies s JOIN designs d ON d.nct_id = s.nct_id "
     "WHERE s.phase = 'Phase 2' AND d.allocation = 'Randomized'"),
    ("trial", "complex", "What is the average enrollment of clinical trials that accept healthy volunteers?",
     "SELECT AVG(s.enrollment) FROM studies s JOIN eligibilities e ON e.nct_id = s.nct_id WHERE e.healthy_volunteers = 1"),
    ("trial", "complex", "How many participants dropped out of phase 3 trials because of adverse events?",
     "SELECT SUM(dw.count) FROM drop_withdrawals dw JOIN studies s ON s.nct_id = dw.nct_id "
     "WHERE s.phase = 'Phase 3' AND dw.reason = 'Adverse Event'"),
    ("trial", "complex", "Which clinical trial had the most subjects affected by serious adverse events?",
     "SELECT s.brief_title FROM reported_event_totals r JOIN studies s ON s.nct_id = r.nct_id "
     "WHERE r.event_type = 'serious' ORDER BY r.subjects_affected DESC, s.nct_id LIMIT 1"),
    ("trial", "complex", "How many analyses of primary outcomes report a p-value below 0.05?",
     "SELECT COUNT(*) FROM outcome_analyses a JOIN outcomes o ON o.id = a.outcome_id "
     "WHERE o.outcome_type = 'Primary' AND a.p_value < 0.05"),
    # -------------------------------------------------------------- stack
    ("stack", "simple", "Give me the total number of posts in Stack-Exchange.",
     "SELECT COUNT(*) FROM posts"),
    ("stack", "simple", "Give me the ids of the 10 newest posts from Stack-Exchange.",
     "SELECT Id FROM posts ORDER BY CreationDate DESC, Id DESC LIMIT 10"),
    ("stack", "simple", "Show me the AccountId of the longest existing user on Stack-Exchange.",
     "SELECT AccountId FROM users ORDER BY CreationDate LIMIT 1"),
    ("stack", "simple", "How many questions have been asked on Stack Exchange?",
     "SELECT COUNT(*) FROM posts WHERE PostTypeId = 1"),
    ("stack", "simple", "What is the highest score of any Stack Exchange post?",
     "SELECT MAX(Score) FROM posts"),
    ("stack", "simple", "How many gold badges have been awarded on Stack Exchange?",
     "SELECT COUNT(*) FROM badges WHERE Class = 1"),
    ("stack", "simple", "Which badge has been awarded most often on Stack Exchange?",
     "SELECT Name FROM badges GROUP BY Name ORDER BY COUNT(*) DESC, Name LIMIT 1"),
    ("stack", "simple", "How many comments does the most frequently commented post on Stack Exchange have?",
     "SELECT COUNT(*) FROM comments GROUP BY PostId ORDER BY COUNT(*) DESC LIMIT 1"),
    ("stack", "simple", "What is the display name of the Stack Exchange user with the highest reputation?",
     "SELECT DisplayName FROM users ORDER BY Reputation DESC, Id LIMIT 1"),
    ("stack", "simple", "How many Stack Exchange comments were written in 2021?",
     "SELECT COUNT(*) FROM comments WHERE strftime('%Y', CreationDate) = '2021'"),
    ("stack", "complex", "What is the title of the most commented question on Stack Exchange?",
     "SELECT p.Title FROM comments c JOIN posts p ON p.Id = c.PostId WHERE p.PostTypeId = 1 "
     "GROUP BY p.Id ORDER BY COUNT(*) DESC, p.Id LIMIT 1"),
    ("stack", "complex", "What is the display name of the Stack Exchange user who wrote the most comments?",
     "SELECT u.DisplayName FROM comments c JOIN users u ON u.Id = c.UserId "
     "GROUP BY u.Id ORDER BY COUNT(*) DESC, u.Id LIMIT 1"),
    ("stack", "complex", "Which Stack Exchange user owns the most posts with a score above 10? Give the display name.",
     "SELECT u.DisplayName FROM posts p JOIN users u ON u.Id = p.OwnerUserId WHERE p.Score > 10 "
     "GROUP BY u.Id ORDER BY COUNT(*) DESC, u.Id LIMIT 1"),
    ("stack", "complex", "How many badges does the Stack Exchange user with the highest reputation hold?",
     "SELECT COUNT(*) FROM badges b JOIN users u ON u.Id = b.UserId "
     "WHERE u.Id = (SELECT Id FROM users ORDER BY Reputation DESC, Id LIMIT 1)"),
    ("stack", "complex", "What is the title of the Stack Exchange question that received the most upvotes?",
     "SELECT p.Title FROM votes v JOIN posts p ON p.Id = v.PostId WHERE v.VoteTypeId = 2 AND p.PostTypeId = 1 "
     "GROUP BY p.Id ORDER BY COUNT(*) DESC, p.Id LIMIT 1"),
    ("stack", "complex", "How many post edits on Stack Exchange were made by users located in Germany?",
     "SELECT COUNT(*) FROM postHistory h JOIN users u ON u.Id = h.UserId WHERE u.Location LIKE '%Germany'"),
    ("stack", "complex", "How many Stack Exchange post links point from a post with a score of at least 5?",
     "SELECT COUNT(*) FROM postLinks l JOIN posts p ON p.Id = l.PostId WHERE p.Score >= 5"),
    ("stack", "complex", "Which user location on Stack Exchange has earned the most gold badges?",
     "SELECT u.Location FROM badges b JOIN users u ON u.Id = b.UserId WHERE b.Class = 1 AND u.Location IS NOT NULL "
     "GROUP BY u.Location ORDER BY COUNT(*) DESC, u.Location LIMIT 1"),
    ("stack", "complex", "What is the average score of Stack Exchange posts written by users who joined in 2019?",
     "SELECT AVG(p.Score) FROM posts p JOIN users u ON u.Id = p.OwnerUserId WHERE strftime('%Y', u.CreationDate) = '2019'"),
    ("stack", "complex", "How many votes were cast on answers on Stack Exchange?",
     "SELECT COUNT(*) FROM votes v JOIN posts p ON p.Id = v.PostId WHERE p.PostTypeId = 2"),
    # ----------------------------------------------------------------- hm
    ("hm", "simple", "What different member statuses does H&M have?",
     "SELECT DISTINCT club_member_status FROM customer"),
    ("hm", "simple", "How many customers at H&M are younger than 40?",
     "SELECT COUNT(*) FROM customer WHERE age < 40"),
    ("hm", "simple", "How many customers does H&M have?",
     "SELECT COUNT(*) FROM customer"),
    ("hm", "simple", "How many H&M articles are trousers?",
     "SELECT COUNT(*) FROM article WHERE product_type_name = 'Trousers'"),
    ("hm", "simple", "What is the average age of H&M customers?",
     "SELECT AVG(age) FROM customer"),
    ("hm", "simple", "How many H&M transactions were made through sales channel 2?",
     "SELECT COUNT(*) FROM transactions WHERE sales_channel_id = 2"),
    ("hm", "simple", "Which H&M product group has the most articles?",
     "SELECT product_group_name FROM article GROUP BY product_group_name ORDER BY COUNT(*) DESC, product_group_name LIMIT 1"),
    ("hm", "simple", "How many H&M customers receive the fashion newsletter regularly?",
     "SELECT COUNT(*) FROM customer WHERE fashion_news_frequency = 'Regularly'"),
    ("hm", "simple", "What was the total H&M revenue in September 2020?",
     "SELECT SUM(price) FROM transactions WHERE t_dat LIKE '2020-09%'"),
    ("hm", "simple", "In how many different colours do H&M articles come?",
     "SELECT COUNT(DISTINCT colour_group_name) FROM article"),
    ("hm", "complex", "Tell me the 8 most expensive products from H&M.",
     "SELECT a.prod_name FROM transactions t JOIN article a ON a.article_id = t.article_id "
     "GROUP BY a.article_id ORDER BY MAX(t.price) DESC LIMIT 8"),
    ("hm", "complex", "Which H&M article was bought most often? Give its product name.",
     "SELECT a.prod_name FROM transactions t JOIN article a ON a.article_id = t.article_id "
     "GROUP BY a.article_id ORDER BY COUNT(*) DESC, a.article_id LIMIT 1"),
    ("hm", "complex", "How many H&M purchases were made by customers younger than 25?",
     "SELECT COUNT(*) FROM transactions t JOIN customer c ON c.customer_id = t.customer_id WHERE c.age < 25"),
    ("hm", "complex", "Which H&M department generated the highest revenue?",
     "SELECT a.department_name FROM transactions t JOIN article a ON a.article_id = t.article_id "
     "GROUP BY a.department_name ORDER BY SUM(t.price) DESC LIMIT 1"),
    ("hm", "complex", "What is the average age of H&M customers who bought a dress?",
     "SELECT AVG(c.age) FROM customer c WHERE c.customer_id IN (SELECT t.customer_id FROM transactions t "
     "JOIN article a ON a.article_id = t.article_id WHERE a.product_type_name = 'Dress')"),
    ("hm", "complex", "How many distinct H&M customers bought a black article?",
     "SELECT COUNT(DISTINCT t.customer_id) FROM transactions t JOIN article a ON a.article_id = t.article_id "
     "WHERE a.colour_group_name = 'Black'"),
    ("hm", "complex", "How much did the oldest H&M customer spend in total?",
     "SELECT SUM(t.price) FROM transactions t JOIN customer c ON c.customer_id = t.customer_id "
     "WHERE c.customer_id = (SELECT customer_id FROM customer ORDER BY age DESC, customer_id LIMIT 1)"),
    ("hm", "complex", "Which H&M club member status has the highest total spend?",
     "SELECT c.club_member_status FROM transactions t JOIN customer c ON c.customer_id = t.customer_id "
     "GROUP BY c.club_member_status ORDER BY SUM(t.price) DESC LIMIT 1"),
    ("hm", "complex", "How many H&M swimwear items were sold through sales channel 2?",
     "SELECT COUNT(*) FROM transactions t JOIN article a ON a.article_id = t.article_id "
     "WHERE a.product_group_name = 'Swimwear' AND t.sales_channel_id = 2"),
    ("hm", "complex", "What is the product name of the most expensive H&M article bought by a customer aged over 60?",
     "SELECT a.prod_name FROM transactions t JOIN article a ON a.article_id = t.article_id "
     "JOIN customer c ON c.customer_id = t.customer_id WHERE c.age > 60 ORDER BY t.price DESC LIMIT 1"),
]
