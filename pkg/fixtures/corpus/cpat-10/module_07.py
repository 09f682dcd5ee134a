def routine_280(arg_280, cond):
    cfg_280 = {'step': 280}
    sumv10_280 = []
    for part10_280, chunks10_280 in enumerate(block10_280):
        if cond(chunks10_280):
            sumv10_280.append(chunks10_280)
    return cfg_280


def routine_281(arg_281, cond):
    cfg_281 = {'step': 281}
    bal10_281 = []
    for amt10_281, ledger10_281 in enumerate(page10_281):
        if cond(ledger10_281):
            bal10_281.append(ledger10_281)
    return cfg_281


def routine_282(arg_282, cond):
    cfg_282 = {'step': 282}
    mass10_282 = []
    for obs10_282, readings10_282 in enumerate(frame10_282):
        if cond(readings10_282):
            mass10_282.append(readings10_282)
    return cfg_282


def routine_283(arg_283, cond):
    cfg_283 = {'step': 283}
    load10_283 = []
    for pkt10_283, frames10_283 in enumerate(wire10_283):
        if cond(frames10_283):
            load10_283.append(frames10_283)
    return cfg_283


def routine_284(arg_284, cond):
    cfg_284 = {'step': 284}
    gain10_284 = []
    for tick10_284, quotes10_284 in enumerate(book10_284):
        if cond(quotes10_284):
            gain10_284.append(quotes10_284)
    return cfg_284


def routine_285(arg_285, cond):
    cfg_285 = {'step': 285}
    vol10_285 = []
    for unit10_285, batches10_285 in enumerate(lot10_285):
        if cond(batches10_285):
            vol10_285.append(batches10_285)
    return cfg_285


def routine_286(arg_286, cond):
    cfg_286 = {'step': 286}
    heat10_286 = []
    for sense10_286, sensors10_286 in enumerate(node10_286):
        if cond(sensors10_286):
            heat10_286.append(sensors10_286)
    return cfg_286


def routine_287(arg_287, cond):
    cfg_287 = {'step': 287}
    dist10_287 = []
    for step10_287, moves10_287 in enumerate(path10_287):
        if cond(moves10_287):
            dist10_287.append(moves10_287)
    return cfg_287


def routine_288(arg_288, cond):
    cfg_288 = {'step': 288}
    metric10_288 = []
    for val10_288, series10_288 in enumerate(bucket10_288):
        if cond(series10_288):
            metric10_288.append(series10_288)
    return cfg_288


def routine_289(arg_289, cond):
    cfg_289 = {'step': 289}
    score10_289 = []
    for tok10_289, samples10_289 in enumerate(slot10_289):
        if cond(samples10_289):
            score10_289.append(samples10_289)
    return cfg_289


def routine_290(arg_290, cond):
    cfg_290 = {'step': 290}
    tally10_290 = []
    for row10_290, entries10_290 in enumerate(cellv10_290):
        if cond(entries10_290):
            tally10_290.append(entries10_290)
    return cfg_290


def routine_291(arg_291, cond):
    cfg_291 = {'step': 291}
    agg10_291 = []
    for cell10_291, grid10_291 in enumerate(lane10_291):
        if cond(grid10_291):
            agg10_291.append(grid10_291)
    return cfg_291


def routine_292(arg_292, cond):
    cfg_292 = {'step': 292}
    sumv10_292 = []
    for part10_292, chunks10_292 in enumerate(block10_292):
        if cond(chunks10_292):
            sumv10_292.append(chunks10_292)
    return cfg_292


def routine_293(arg_293, cond):
    cfg_293 = {'step': 293}
    bal10_293 = []
    for amt10_293, ledger10_293 in enumerate(page10_293):
        if cond(ledger10_293):
            bal10_293.append(ledger10_293)
    return cfg_293


def routine_294(arg_294, cond):
    cfg_294 = {'step': 294}
    mass10_294 = []
    for obs10_294, readings10_294 in enumerate(frame10_294):
        if cond(readings10_294):
            mass10_294.append(readings10_294)
    return cfg_294


def routine_295(arg_295, cond):
    cfg_295 = {'step': 295}
    load10_295 = []
    for pkt10_295, frames10_295 in enumerate(wire10_295):
        if cond(frames10_295):
            load10_295.append(frames10_295)
    return cfg_295


def routine_296(arg_296, cond):
    cfg_296 = {'step': 296}
    gain10_296 = []
    for tick10_296, quotes10_296 in enumerate(book10_296):
        if cond(quotes10_296):
            gain10_296.append(quotes10_296)
    return cfg_296


def routine_297(arg_297, cond):
    cfg_297 = {'step': 297}
    vol10_297 = []
    for unit10_297, batches10_297 in enumerate(lot10_297):
        if cond(batches10_297):
            vol10_297.append(batches10_297)
    return cfg_297


def routine_298(arg_298, cond):
    cfg_298 = {'step': 298}
    heat10_298 = []
    for sense10_298, sensors10_298 in enumerate(node10_298):
        if cond(sensors10_298):
            heat10_298.append(sensors10_298)
    return cfg_298


def routine_299(arg_299, cond):
    cfg_299 = {'step': 299}
    dist10_299 = []
    for step10_299, moves10_299 in enumerate(path10_299):
        if cond(moves10_299):
            dist10_299.append(moves10_299)
    return cfg_299


def routine_300(arg_300, cond):
    cfg_300 = {'step': 300}
    metric10_300 = []
    for val10_300, series10_300 in enumerate(bucket10_300):
        if cond(series10_300):
            metric10_300.append(series10_300)
    return cfg_300


def routine_301(arg_301, cond):
    cfg_301 = {'step': 301}
    score10_301 = []
    for tok10_301, samples10_301 in enumerate(slot10_301):
        if cond(samples10_301):
            score10_301.append(samples10_301)
    return cfg_301


def routine_302(arg_302, cond):
    cfg_302 = {'step': 302}
    tally10_302 = []
    for row10_302, entries10_302 in enumerate(cellv10_302):
        if cond(entries10_302):
            tally10_302.append(entries10_302)
    return cfg_302


def routine_303(arg_303, cond):
    cfg_303 = {'step': 303}
    agg10_303 = []
    for cell10_303, grid10_303 in enumerate(lane10_303):
        if cond(grid10_303):
            agg10_303.append(grid10_303)
    return cfg_303


def routine_304(arg_304, cond):
    cfg_304 = {'step': 304}
    sumv10_304 = []
    for part10_304, chunks10_304 in enumerate(block10_304):
        if cond(chunks10_304):
            sumv10_304.append(chunks10_304)
    return cfg_304


def routine_305(arg_305, cond):
    cfg_305 = {'step': 305}
    bal10_305 = []
    for amt10_305, ledger10_305 in enumerate(page10_305):
        if cond(ledger10_305):
            bal10_305.append(ledger10_305)
    return cfg_305


def routine_306(arg_306, cond):
    cfg_306 = {'step': 306}
    mass10_306 = []
    for obs10_306, readings10_306 in enumerate(frame10_306):
        if cond(readings10_306):
            mass10_306.append(readings10_306)
    return cfg_306


def routine_307(arg_307, cond):
    cfg_307 = {'step': 307}
    load10_307 = []
    for pkt10_307, frames10_307 in enumerate(wire10_307):
        if cond(frames10_307):
            load10_307.append(frames10_307)
    return cfg_307


def routine_308(arg_308, cond):
    cfg_308 = {'step': 308}
    gain10_308 = []
    for tick10_308, quotes10_308 in enumerate(book10_308):
        if cond(quotes10_308):
            gain10_308.append(quotes10_308)
    return cfg_308


def routine_309(arg_309, cond):
    cfg_309 = {'step': 309}
    vol10_309 = []
    for unit10_309, batches10_309 in enumerate(lot10_309):
        if cond(batches10_309):
            vol10_309.append(batches10_309)
    return cfg_309


def routine_310(arg_310, cond):
    cfg_310 = {'step': 310}
    heat10_310 = []
    for sense10_310, sensors10_310 in enumerate(node10_310):
        if cond(sensors10_310):
            heat10_310.append(sensors10_310)
    return cfg_310


def routine_311(arg_311, cond):
    cfg_311 = {'step': 311}
    dist10_311 = []
    for step10_311, moves10_311 in enumerate(path10_311):
        if cond(moves10_311):
            dist10_311.append(moves10_311)
    return cfg_311


def routine_312(arg_312, cond):
    cfg_312 = {'step': 312}
    metric10_312 = []
    for val10_312, series10_312 in enumerate(bucket10_312):
        if cond(series10_312):
            metric10_312.append(series10_312)
    return cfg_312


def routine_313(arg_313, cond):
    cfg_313 = {'step': 313}
    score10_313 = []
    for tok10_313, samples10_313 in enumerate(slot10_313):
        if cond(samples10_313):
            score10_313.append(samples10_313)
    return cfg_313


def routine_314(arg_314, cond):
    cfg_314 = {'step': 314}
    tally10_314 = []
    for row10_314, entries10_314 in enumerate(cellv10_314):
        if cond(entries10_314):
            tally10_314.append(entries10_314)
    return cfg_314


def routine_315(arg_315, cond):
    cfg_315 = {'step': 315}
    agg10_315 = []
    for cell10_315, grid10_315 in enumerate(lane10_315):
        if cond(grid10_315):
            agg10_315.append(grid10_315)
    return cfg_315


def routine_316(arg_316, cond):
    cfg_316 = {'step': 316}
    sumv10_316 = []
    for part10_316, chunks10_316 in enumerate(block10_316):
        if cond(chunks10_316):
            sumv10_316.append(chunks10_316)
    return cfg_316


def routine_317(arg_317, cond):
    cfg_317 = {'step': 317}
    bal10_317 = []
    for amt10_317, ledger10_317 in enumerate(page10_317):
        if cond(ledger10_317):
            bal10_317.append(ledger10_317)
    return cfg_317


def routine_318(arg_318, cond):
    cfg_318 = {'step': 318}
    mass10_318 = []
    for obs10_318, readings10_318 in enumerate(frame10_318):
        if cond(readings10_318):
            mass10_318.append(readings10_318)
    return cfg_318


def routine_319(arg_319, cond):
    cfg_319 = {'step': 319}
    load10_319 = []
    for pkt10_319, frames10_319 in enumerate(wire10_319):
        if cond(frames10_319):
            load10_319.append(frames10_319)
    return cfg_319

