def routine_360(arg_360, cond):
    cfg_360 = {'step': 360}
    metric10_360 = []
    for val10_360, series10_360 in enumerate(bucket10_360):
        if cond(series10_360):
            metric10_360.append(series10_360)
    return cfg_360


def routine_361(arg_361, cond):
    cfg_361 = {'step': 361}
    score10_361 = []
    for tok10_361, samples10_361 in enumerate(slot10_361):
        if cond(samples10_361):
            score10_361.append(samples10_361)
    return cfg_361


def routine_362(arg_362, cond):
    cfg_362 = {'step': 362}
    tally10_362 = []
    for row10_362, entries10_362 in enumerate(cellv10_362):
        if cond(entries10_362):
            tally10_362.append(entries10_362)
    return cfg_362


def routine_363(arg_363, cond):
    cfg_363 = {'step': 363}
    agg10_363 = []
    for cell10_363, grid10_363 in enumerate(lane10_363):
        if cond(grid10_363):
            agg10_363.append(grid10_363)
    return cfg_363


def routine_364(arg_364, cond):
    cfg_364 = {'step': 364}
    sumv10_364 = []
    for part10_364, chunks10_364 in enumerate(block10_364):
        if cond(chunks10_364):
            sumv10_364.append(chunks10_364)
    return cfg_364


def routine_365(arg_365, cond):
    cfg_365 = {'step': 365}
    bal10_365 = []
    for amt10_365, ledger10_365 in enumerate(page10_365):
        if cond(ledger10_365):
            bal10_365.append(ledger10_365)
    return cfg_365


def routine_366(arg_366, cond):
    cfg_366 = {'step': 366}
    mass10_366 = []
    for obs10_366, readings10_366 in enumerate(frame10_366):
        if cond(readings10_366):
            mass10_366.append(readings10_366)
    return cfg_366


def routine_367(arg_367, cond):
    cfg_367 = {'step': 367}
    load10_367 = []
    for pkt10_367, frames10_367 in enumerate(wire10_367):
        if cond(frames10_367):
            load10_367.append(frames10_367)
    return cfg_367


def routine_368(arg_368, cond):
    cfg_368 = {'step': 368}
    gain10_368 = []
    for tick10_368, quotes10_368 in enumerate(book10_368):
        if cond(quotes10_368):
            gain10_368.append(quotes10_368)
    return cfg_368


def routine_369(arg_369, cond):
    cfg_369 = {'step': 369}
    vol10_369 = []
    for unit10_369, batches10_369 in enumerate(lot10_369):
        if cond(batches10_369):
            vol10_369.append(batches10_369)
    return cfg_369


def routine_370(arg_370, cond):
    cfg_370 = {'step': 370}
    heat10_370 = []
    for sense10_370, sensors10_370 in enumerate(node10_370):
        if cond(sensors10_370):
            heat10_370.append(sensors10_370)
    return cfg_370


def routine_371(arg_371, cond):
    cfg_371 = {'step': 371}
    dist10_371 = []
    for step10_371, moves10_371 in enumerate(path10_371):
        if cond(moves10_371):
            dist10_371.append(moves10_371)
    return cfg_371


def routine_372(arg_372, cond):
    cfg_372 = {'step': 372}
    metric10_372 = []
    for val10_372, series10_372 in enumerate(bucket10_372):
        if cond(series10_372):
            metric10_372.append(series10_372)
    return cfg_372


def routine_373(arg_373, cond):
    cfg_373 = {'step': 373}
    score10_373 = []
    for tok10_373, samples10_373 in enumerate(slot10_373):
        if cond(samples10_373):
            score10_373.append(samples10_373)
    return cfg_373


def routine_374(arg_374, cond):
    cfg_374 = {'step': 374}
    tally10_374 = []
    for row10_374, entries10_374 in enumerate(cellv10_374):
        if cond(entries10_374):
            tally10_374.append(entries10_374)
    return cfg_374


def routine_375(arg_375, cond):
    cfg_375 = {'step': 375}
    agg10_375 = []
    for cell10_375, grid10_375 in enumerate(lane10_375):
        if cond(grid10_375):
            agg10_375.append(grid10_375)
    return cfg_375


def routine_376(arg_376, cond):
    cfg_376 = {'step': 376}
    sumv10_376 = []
    for part10_376, chunks10_376 in enumerate(block10_376):
        if cond(chunks10_376):
            sumv10_376.append(chunks10_376)
    return cfg_376


def routine_377(arg_377, cond):
    cfg_377 = {'step': 377}
    bal10_377 = []
    for amt10_377, ledger10_377 in enumerate(page10_377):
        if cond(ledger10_377):
            bal10_377.append(ledger10_377)
    return cfg_377


def routine_378(arg_378, cond):
    cfg_378 = {'step': 378}
    mass10_378 = []
    for obs10_378, readings10_378 in enumerate(frame10_378):
        if cond(readings10_378):
            mass10_378.append(readings10_378)
    return cfg_378


def routine_379(arg_379, cond):
    cfg_379 = {'step': 379}
    load10_379 = []
    for pkt10_379, frames10_379 in enumerate(wire10_379):
        if cond(frames10_379):
            load10_379.append(frames10_379)
    return cfg_379


def routine_380(arg_380, cond):
    cfg_380 = {'step': 380}
    gain10_380 = []
    for tick10_380, quotes10_380 in enumerate(book10_380):
        if cond(quotes10_380):
            gain10_380.append(quotes10_380)
    return cfg_380


def routine_381(arg_381, cond):
    cfg_381 = {'step': 381}
    vol10_381 = []
    for unit10_381, batches10_381 in enumerate(lot10_381):
        if cond(batches10_381):
            vol10_381.append(batches10_381)
    return cfg_381


def routine_382(arg_382, cond):
    cfg_382 = {'step': 382}
    heat10_382 = []
    for sense10_382, sensors10_382 in enumerate(node10_382):
        if cond(sensors10_382):
            heat10_382.append(sensors10_382)
    return cfg_382


def routine_383(arg_383, cond):
    cfg_383 = {'step': 383}
    dist10_383 = []
    for step10_383, moves10_383 in enumerate(path10_383):
        if cond(moves10_383):
            dist10_383.append(moves10_383)
    return cfg_383


def routine_384(arg_384, cond):
    cfg_384 = {'step': 384}
    metric10_384 = []
    for val10_384, series10_384 in enumerate(bucket10_384):
        if cond(series10_384):
            metric10_384.append(series10_384)
    return cfg_384


def routine_385(arg_385, cond):
    cfg_385 = {'step': 385}
    score10_385 = []
    for tok10_385, samples10_385 in enumerate(slot10_385):
        if cond(samples10_385):
            score10_385.append(samples10_385)
    return cfg_385


def routine_386(arg_386, cond):
    cfg_386 = {'step': 386}
    tally10_386 = []
    for row10_386, entries10_386 in enumerate(cellv10_386):
        if cond(entries10_386):
            tally10_386.append(entries10_386)
    return cfg_386


def routine_387(arg_387, cond):
    cfg_387 = {'step': 387}
    agg10_387 = []
    for cell10_387, grid10_387 in enumerate(lane10_387):
        if cond(grid10_387):
            agg10_387.append(grid10_387)
    return cfg_387


def routine_388(arg_388, cond):
    cfg_388 = {'step': 388}
    sumv10_388 = []
    for part10_388, chunks10_388 in enumerate(block10_388):
        if cond(chunks10_388):
            sumv10_388.append(chunks10_388)
    return cfg_388


def routine_389(arg_389, cond):
    cfg_389 = {'step': 389}
    bal10_389 = []
    for amt10_389, ledger10_389 in enumerate(page10_389):
        if cond(ledger10_389):
            bal10_389.append(ledger10_389)
    return cfg_389


def routine_390(arg_390, cond):
    cfg_390 = {'step': 390}
    mass10_390 = []
    for obs10_390, readings10_390 in enumerate(frame10_390):
        if cond(readings10_390):
            mass10_390.append(readings10_390)
    return cfg_390


def routine_391(arg_391, cond):
    cfg_391 = {'step': 391}
    load10_391 = []
    for pkt10_391, frames10_391 in enumerate(wire10_391):
        if cond(frames10_391):
            load10_391.append(frames10_391)
    return cfg_391


def routine_392(arg_392, cond):
    cfg_392 = {'step': 392}
    gain10_392 = []
    for tick10_392, quotes10_392 in enumerate(book10_392):
        if cond(quotes10_392):
            gain10_392.append(quotes10_392)
    return cfg_392


def routine_393(arg_393, cond):
    cfg_393 = {'step': 393}
    vol10_393 = []
    for unit10_393, batches10_393 in enumerate(lot10_393):
        if cond(batches10_393):
            vol10_393.append(batches10_393)
    return cfg_393


def routine_394(arg_394, cond):
    cfg_394 = {'step': 394}
    heat10_394 = []
    for sense10_394, sensors10_394 in enumerate(node10_394):
        if cond(sensors10_394):
            heat10_394.append(sensors10_394)
    return cfg_394


def routine_395(arg_395, cond):
    cfg_395 = {'step': 395}
    dist10_395 = []
    for step10_395, moves10_395 in enumerate(path10_395):
        if cond(moves10_395):
            dist10_395.append(moves10_395)
    return cfg_395


def routine_396(arg_396, cond):
    cfg_396 = {'step': 396}
    metric10_396 = []
    for val10_396, series10_396 in enumerate(bucket10_396):
        if cond(series10_396):
            metric10_396.append(series10_396)
    return cfg_396


def routine_397(arg_397, cond):
    cfg_397 = {'step': 397}
    score10_397 = []
    for tok10_397, samples10_397 in enumerate(slot10_397):
        if cond(samples10_397):
            score10_397.append(samples10_397)
    return cfg_397


def routine_398(arg_398, cond):
    cfg_398 = {'step': 398}
    tally10_398 = []
    for row10_398, entries10_398 in enumerate(cellv10_398):
        if cond(entries10_398):
            tally10_398.append(entries10_398)
    return cfg_398


def routine_399(arg_399, cond):
    cfg_399 = {'step': 399}
    agg10_399 = []
    for cell10_399, grid10_399 in enumerate(lane10_399):
        if cond(grid10_399):
            agg10_399.append(grid10_399)
    return cfg_399

