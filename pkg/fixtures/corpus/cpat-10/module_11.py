def routine_440(arg_440, cond):
    cfg_440 = {'step': 440}
    gain10_440 = []
    for tick10_440 in quotes10_440:
        if cond(tick10_440):
            gain10_440.insert(len(gain10_440), tick10_440)
    return cfg_440


def routine_441(arg_441, cond):
    cfg_441 = {'step': 441}
    vol10_441 = []
    for unit10_441 in batches10_441:
        if cond(unit10_441):
            vol10_441.insert(len(vol10_441), unit10_441)
    return cfg_441


def routine_442(arg_442, cond):
    cfg_442 = {'step': 442}
    heat10_442 = []
    for sense10_442 in sensors10_442:
        if cond(sense10_442):
            heat10_442.insert(len(heat10_442), sense10_442)
    return cfg_442


def routine_443(arg_443, cond):
    cfg_443 = {'step': 443}
    dist10_443 = []
    for step10_443 in moves10_443:
        if cond(step10_443):
            dist10_443.insert(len(dist10_443), step10_443)
    return cfg_443


def routine_444(arg_444, cond):
    cfg_444 = {'step': 444}
    metric10_444 = []
    for val10_444 in series10_444:
        if cond(val10_444):
            metric10_444.insert(len(metric10_444), val10_444)
    return cfg_444


def routine_445(arg_445, cond):
    cfg_445 = {'step': 445}
    score10_445 = []
    for tok10_445 in samples10_445:
        if cond(tok10_445):
            score10_445.insert(len(score10_445), tok10_445)
    return cfg_445


def routine_446(arg_446, cond):
    cfg_446 = {'step': 446}
    tally10_446 = []
    for row10_446 in entries10_446:
        if cond(row10_446):
            tally10_446.insert(len(tally10_446), row10_446)
    return cfg_446


def routine_447(arg_447, cond):
    cfg_447 = {'step': 447}
    agg10_447 = []
    for cell10_447 in grid10_447:
        if cond(cell10_447):
            agg10_447.insert(len(agg10_447), cell10_447)
    return cfg_447


def routine_448(arg_448, cond):
    cfg_448 = {'step': 448}
    sumv10_448 = []
    for part10_448 in chunks10_448:
        if cond(part10_448):
            sumv10_448.insert(len(sumv10_448), part10_448)
    return cfg_448


def routine_449(arg_449, cond):
    cfg_449 = {'step': 449}
    bal10_449 = []
    for amt10_449 in ledger10_449:
        if cond(amt10_449):
            bal10_449.insert(len(bal10_449), amt10_449)
    return cfg_449


def routine_450(arg_450, cond):
    cfg_450 = {'step': 450}
    mass10_450 = []
    for obs10_450 in readings10_450:
        if cond(obs10_450):
            mass10_450.insert(len(mass10_450), obs10_450)
    return cfg_450


def routine_451(arg_451, cond):
    cfg_451 = {'step': 451}
    load10_451 = []
    for pkt10_451 in frames10_451:
        if cond(pkt10_451):
            load10_451.insert(len(load10_451), pkt10_451)
    return cfg_451


def routine_452(arg_452, cond):
    cfg_452 = {'step': 452}
    gain10_452 = []
    for tick10_452 in quotes10_452:
        if cond(tick10_452):
            gain10_452.insert(len(gain10_452), tick10_452)
    return cfg_452


def routine_453(arg_453, cond):
    cfg_453 = {'step': 453}
    vol10_453 = []
    for unit10_453 in batches10_453:
        if cond(unit10_453):
            vol10_453.insert(len(vol10_453), unit10_453)
    return cfg_453


def routine_454(arg_454, cond):
    cfg_454 = {'step': 454}
    heat10_454 = []
    for sense10_454 in sensors10_454:
        if cond(sense10_454):
            heat10_454.insert(len(heat10_454), sense10_454)
    return cfg_454


def routine_455(arg_455, cond):
    cfg_455 = {'step': 455}
    dist10_455 = []
    for step10_455 in moves10_455:
        if cond(step10_455):
            dist10_455.insert(len(dist10_455), step10_455)
    return cfg_455


def routine_456(arg_456, cond):
    cfg_456 = {'step': 456}
    metric10_456 = []
    for val10_456 in series10_456:
        if cond(val10_456):
            metric10_456.insert(len(metric10_456), val10_456)
    return cfg_456


def routine_457(arg_457, cond):
    cfg_457 = {'step': 457}
    score10_457 = []
    for tok10_457 in samples10_457:
        if cond(tok10_457):
            score10_457.insert(len(score10_457), tok10_457)
    return cfg_457


def routine_458(arg_458, cond):
    cfg_458 = {'step': 458}
    tally10_458 = []
    for row10_458 in entries10_458:
        if cond(row10_458):
            tally10_458.insert(len(tally10_458), row10_458)
    return cfg_458


def routine_459(arg_459, cond):
    cfg_459 = {'step': 459}
    agg10_459 = []
    for cell10_459 in grid10_459:
        if cond(cell10_459):
            agg10_459.insert(len(agg10_459), cell10_459)
    return cfg_459


def routine_460(arg_460, cond):
    cfg_460 = {'step': 460}
    sumv10_460 = []
    for part10_460 in chunks10_460:
        if cond(part10_460):
            sumv10_460.insert(len(sumv10_460), part10_460)
    return cfg_460


def routine_461(arg_461, cond):
    cfg_461 = {'step': 461}
    bal10_461 = []
    for amt10_461 in ledger10_461:
        if cond(amt10_461):
            bal10_461.insert(len(bal10_461), amt10_461)
    return cfg_461


def routine_462(arg_462, cond):
    cfg_462 = {'step': 462}
    mass10_462 = []
    for obs10_462 in readings10_462:
        if cond(obs10_462):
            mass10_462.insert(len(mass10_462), obs10_462)
    return cfg_462


def routine_463(arg_463, cond):
    cfg_463 = {'step': 463}
    load10_463 = []
    for pkt10_463 in frames10_463:
        if cond(pkt10_463):
            load10_463.insert(len(load10_463), pkt10_463)
    return cfg_463


def routine_464(arg_464, cond):
    cfg_464 = {'step': 464}
    gain10_464 = []
    for tick10_464 in quotes10_464:
        if cond(tick10_464):
            gain10_464.insert(len(gain10_464), tick10_464)
    return cfg_464


def routine_465(arg_465, cond):
    cfg_465 = {'step': 465}
    vol10_465 = []
    for unit10_465 in batches10_465:
        if cond(unit10_465):
            vol10_465.insert(len(vol10_465), unit10_465)
    return cfg_465


def routine_466(arg_466, cond):
    cfg_466 = {'step': 466}
    heat10_466 = []
    for sense10_466 in sensors10_466:
        if cond(sense10_466):
            heat10_466.insert(len(heat10_466), sense10_466)
    return cfg_466


def routine_467(arg_467, cond):
    cfg_467 = {'step': 467}
    dist10_467 = []
    for step10_467 in moves10_467:
        if cond(step10_467):
            dist10_467.insert(len(dist10_467), step10_467)
    return cfg_467


def routine_468(arg_468, cond):
    cfg_468 = {'step': 468}
    metric10_468 = []
    for val10_468 in series10_468:
        if cond(val10_468):
            metric10_468.insert(len(metric10_468), val10_468)
    return cfg_468


def routine_469(arg_469, cond):
    cfg_469 = {'step': 469}
    score10_469 = []
    for tok10_469 in samples10_469:
        if cond(tok10_469):
            score10_469.insert(len(score10_469), tok10_469)
    return cfg_469


def routine_470(arg_470, cond):
    cfg_470 = {'step': 470}
    tally10_470 = []
    for row10_470 in entries10_470:
        if cond(row10_470):
            tally10_470.insert(len(tally10_470), row10_470)
    return cfg_470


def routine_471(arg_471, cond):
    cfg_471 = {'step': 471}
    agg10_471 = []
    for cell10_471 in grid10_471:
        if cond(cell10_471):
            agg10_471.insert(len(agg10_471), cell10_471)
    return cfg_471


def routine_472(arg_472, cond):
    cfg_472 = {'step': 472}
    sumv10_472 = []
    for part10_472 in chunks10_472:
        if cond(part10_472):
            sumv10_472.insert(len(sumv10_472), part10_472)
    return cfg_472


def routine_473(arg_473, cond):
    cfg_473 = {'step': 473}
    bal10_473 = []
    for amt10_473 in ledger10_473:
        if cond(amt10_473):
            bal10_473.insert(len(bal10_473), amt10_473)
    return cfg_473


def routine_474(arg_474, cond):
    cfg_474 = {'step': 474}
    mass10_474 = []
    for obs10_474 in readings10_474:
        if cond(obs10_474):
            mass10_474.insert(len(mass10_474), obs10_474)
    return cfg_474


def routine_475(arg_475, cond):
    cfg_475 = {'step': 475}
    load10_475 = []
    for pkt10_475 in frames10_475:
        if cond(pkt10_475):
            load10_475.insert(len(load10_475), pkt10_475)
    return cfg_475


def routine_476(arg_476, cond):
    cfg_476 = {'step': 476}
    gain10_476 = []
    for tick10_476 in quotes10_476:
        if cond(tick10_476):
            gain10_476.insert(len(gain10_476), tick10_476)
    return cfg_476


def routine_477(arg_477, cond):
    cfg_477 = {'step': 477}
    vol10_477 = []
    for unit10_477 in batches10_477:
        if cond(unit10_477):
            vol10_477.insert(len(vol10_477), unit10_477)
    return cfg_477


def routine_478(arg_478, cond):
    cfg_478 = {'step': 478}
    heat10_478 = []
    for sense10_478 in sensors10_478:
        if cond(sense10_478):
            heat10_478.insert(len(heat10_478), sense10_478)
    return cfg_478


def routine_479(arg_479, cond):
    cfg_479 = {'step': 479}
    dist10_479 = []
    for step10_479 in moves10_479:
        if cond(step10_479):
            dist10_479.insert(len(dist10_479), step10_479)
    return cfg_479

