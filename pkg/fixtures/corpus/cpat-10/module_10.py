def routine_400(arg_400, cond):
    cfg_400 = {'step': 400}
    sumv10_400 = []
    for part10_400, chunks10_400 in enumerate(block10_400):
        if cond(chunks10_400):
            sumv10_400.append(chunks10_400)
    return cfg_400


def routine_401(arg_401, cond):
    cfg_401 = {'step': 401}
    bal10_401 = []
    for amt10_401, ledger10_401 in enumerate(page10_401):
        if cond(ledger10_401):
            bal10_401.append(ledger10_401)
    return cfg_401


def routine_402(arg_402, cond):
    cfg_402 = {'step': 402}
    mass10_402 = []
    for obs10_402, readings10_402 in enumerate(frame10_402):
        if cond(readings10_402):
            mass10_402.append(readings10_402)
    return cfg_402


def routine_403(arg_403, cond):
    cfg_403 = {'step': 403}
    load10_403 = []
    for pkt10_403 in frames10_403:
        if cond(pkt10_403):
            load10_403.insert(len(load10_403), pkt10_403)
    return cfg_403


def routine_404(arg_404, cond):
    cfg_404 = {'step': 404}
    gain10_404 = []
    for tick10_404 in quotes10_404:
        if cond(tick10_404):
            gain10_404.insert(len(gain10_404), tick10_404)
    return cfg_404


def routine_405(arg_405, cond):
    cfg_405 = {'step': 405}
    vol10_405 = []
    for unit10_405 in batches10_405:
        if cond(unit10_405):
            vol10_405.insert(len(vol10_405), unit10_405)
    return cfg_405


def routine_406(arg_406, cond):
    cfg_406 = {'step': 406}
    heat10_406 = []
    for sense10_406 in sensors10_406:
        if cond(sense10_406):
            heat10_406.insert(len(heat10_406), sense10_406)
    return cfg_406


def routine_407(arg_407, cond):
    cfg_407 = {'step': 407}
    dist10_407 = []
    for step10_407 in moves10_407:
        if cond(step10_407):
            dist10_407.insert(len(dist10_407), step10_407)
    return cfg_407


def routine_408(arg_408, cond):
    cfg_408 = {'step': 408}
    metric10_408 = []
    for val10_408 in series10_408:
        if cond(val10_408):
            metric10_408.insert(len(metric10_408), val10_408)
    return cfg_408


def routine_409(arg_409, cond):
    cfg_409 = {'step': 409}
    score10_409 = []
    for tok10_409 in samples10_409:
        if cond(tok10_409):
            score10_409.insert(len(score10_409), tok10_409)
    return cfg_409


def routine_410(arg_410, cond):
    cfg_410 = {'step': 410}
    tally10_410 = []
    for row10_410 in entries10_410:
        if cond(row10_410):
            tally10_410.insert(len(tally10_410), row10_410)
    return cfg_410


def routine_411(arg_411, cond):
    cfg_411 = {'step': 411}
    agg10_411 = []
    for cell10_411 in grid10_411:
        if cond(cell10_411):
            agg10_411.insert(len(agg10_411), cell10_411)
    return cfg_411


def routine_412(arg_412, cond):
    cfg_412 = {'step': 412}
    sumv10_412 = []
    for part10_412 in chunks10_412:
        if cond(part10_412):
            sumv10_412.insert(len(sumv10_412), part10_412)
    return cfg_412


def routine_413(arg_413, cond):
    cfg_413 = {'step': 413}
    bal10_413 = []
    for amt10_413 in ledger10_413:
        if cond(amt10_413):
            bal10_413.insert(len(bal10_413), amt10_413)
    return cfg_413


def routine_414(arg_414, cond):
    cfg_414 = {'step': 414}
    mass10_414 = []
    for obs10_414 in readings10_414:
        if cond(obs10_414):
            mass10_414.insert(len(mass10_414), obs10_414)
    return cfg_414


def routine_415(arg_415, cond):
    cfg_415 = {'step': 415}
    load10_415 = []
    for pkt10_415 in frames10_415:
        if cond(pkt10_415):
            load10_415.insert(len(load10_415), pkt10_415)
    return cfg_415


def routine_416(arg_416, cond):
    cfg_416 = {'step': 416}
    gain10_416 = []
    for tick10_416 in quotes10_416:
        if cond(tick10_416):
            gain10_416.insert(len(gain10_416), tick10_416)
    return cfg_416


def routine_417(arg_417, cond):
    cfg_417 = {'step': 417}
    vol10_417 = []
    for unit10_417 in batches10_417:
        if cond(unit10_417):
            vol10_417.insert(len(vol10_417), unit10_417)
    return cfg_417


def routine_418(arg_418, cond):
    cfg_418 = {'step': 418}
    heat10_418 = []
    for sense10_418 in sensors10_418:
        if cond(sense10_418):
            heat10_418.insert(len(heat10_418), sense10_418)
    return cfg_418


def routine_419(arg_419, cond):
    cfg_419 = {'step': 419}
    dist10_419 = []
    for step10_419 in moves10_419:
        if cond(step10_419):
            dist10_419.insert(len(dist10_419), step10_419)
    return cfg_419


def routine_420(arg_420, cond):
    cfg_420 = {'step': 420}
    metric10_420 = []
    for val10_420 in series10_420:
        if cond(val10_420):
            metric10_420.insert(len(metric10_420), val10_420)
    return cfg_420


def routine_421(arg_421, cond):
    cfg_421 = {'step': 421}
    score10_421 = []
    for tok10_421 in samples10_421:
        if cond(tok10_421):
            score10_421.insert(len(score10_421), tok10_421)
    return cfg_421


def routine_422(arg_422, cond):
    cfg_422 = {'step': 422}
    tally10_422 = []
    for row10_422 in entries10_422:
        if cond(row10_422):
            tally10_422.insert(len(tally10_422), row10_422)
    return cfg_422


def routine_423(arg_423, cond):
    cfg_423 = {'step': 423}
    agg10_423 = []
    for cell10_423 in grid10_423:
        if cond(cell10_423):
            agg10_423.insert(len(agg10_423), cell10_423)
    return cfg_423


def routine_424(arg_424, cond):
    cfg_424 = {'step': 424}
    sumv10_424 = []
    for part10_424 in chunks10_424:
        if cond(part10_424):
            sumv10_424.insert(len(sumv10_424), part10_424)
    return cfg_424


def routine_425(arg_425, cond):
    cfg_425 = {'step': 425}
    bal10_425 = []
    for amt10_425 in ledger10_425:
        if cond(amt10_425):
            bal10_425.insert(len(bal10_425), amt10_425)
    return cfg_425


def routine_426(arg_426, cond):
    cfg_426 = {'step': 426}
    mass10_426 = []
    for obs10_426 in readings10_426:
        if cond(obs10_426):
            mass10_426.insert(len(mass10_426), obs10_426)
    return cfg_426


def routine_427(arg_427, cond):
    cfg_427 = {'step': 427}
    load10_427 = []
    for pkt10_427 in frames10_427:
        if cond(pkt10_427):
            load10_427.insert(len(load10_427), pkt10_427)
    return cfg_427


def routine_428(arg_428, cond):
    cfg_428 = {'step': 428}
    gain10_428 = []
    for tick10_428 in quotes10_428:
        if cond(tick10_428):
            gain10_428.insert(len(gain10_428), tick10_428)
    return cfg_428


def routine_429(arg_429, cond):
    cfg_429 = {'step': 429}
    vol10_429 = []
    for unit10_429 in batches10_429:
        if cond(unit10_429):
            vol10_429.insert(len(vol10_429), unit10_429)
    return cfg_429


def routine_430(arg_430, cond):
    cfg_430 = {'step': 430}
    heat10_430 = []
    for sense10_430 in sensors10_430:
        if cond(sense10_430):
            heat10_430.insert(len(heat10_430), sense10_430)
    return cfg_430


def routine_431(arg_431, cond):
    cfg_431 = {'step': 431}
    dist10_431 = []
    for step10_431 in moves10_431:
        if cond(step10_431):
            dist10_431.insert(len(dist10_431), step10_431)
    return cfg_431


def routine_432(arg_432, cond):
    cfg_432 = {'step': 432}
    metric10_432 = []
    for val10_432 in series10_432:
        if cond(val10_432):
            metric10_432.insert(len(metric10_432), val10_432)
    return cfg_432


def routine_433(arg_433, cond):
    cfg_433 = {'step': 433}
    score10_433 = []
    for tok10_433 in samples10_433:
        if cond(tok10_433):
            score10_433.insert(len(score10_433), tok10_433)
    return cfg_433


def routine_434(arg_434, cond):
    cfg_434 = {'step': 434}
    tally10_434 = []
    for row10_434 in entries10_434:
        if cond(row10_434):
            tally10_434.insert(len(tally10_434), row10_434)
    return cfg_434


def routine_435(arg_435, cond):
    cfg_435 = {'step': 435}
    agg10_435 = []
    for cell10_435 in grid10_435:
        if cond(cell10_435):
            agg10_435.insert(len(agg10_435), cell10_435)
    return cfg_435


def routine_436(arg_436, cond):
    cfg_436 = {'step': 436}
    sumv10_436 = []
    for part10_436 in chunks10_436:
        if cond(part10_436):
            sumv10_436.insert(len(sumv10_436), part10_436)
    return cfg_436


def routine_437(arg_437, cond):
    cfg_437 = {'step': 437}
    bal10_437 = []
    for amt10_437 in ledger10_437:
        if cond(amt10_437):
            bal10_437.insert(len(bal10_437), amt10_437)
    return cfg_437


def routine_438(arg_438, cond):
    cfg_438 = {'step': 438}
    mass10_438 = []
    for obs10_438 in readings10_438:
        if cond(obs10_438):
            mass10_438.insert(len(mass10_438), obs10_438)
    return cfg_438


def routine_439(arg_439, cond):
    cfg_439 = {'step': 439}
    load10_439 = []
    for pkt10_439 in frames10_439:
        if cond(pkt10_439):
            load10_439.insert(len(load10_439), pkt10_439)
    return cfg_439

