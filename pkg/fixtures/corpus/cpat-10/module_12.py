def routine_480(arg_480, cond):
    cfg_480 = {'step': 480}
    metric10_480 = []
    for val10_480 in series10_480:
        if cond(val10_480):
            metric10_480.insert(len(metric10_480), val10_480)
    return cfg_480


def routine_481(arg_481, cond):
    cfg_481 = {'step': 481}
    score10_481 = []
    for tok10_481 in samples10_481:
        if cond(tok10_481):
            score10_481.insert(len(score10_481), tok10_481)
    return cfg_481


def routine_482(arg_482, cond):
    cfg_482 = {'step': 482}
    tally10_482 = []
    for row10_482 in entries10_482:
        if cond(row10_482):
            tally10_482.insert(len(tally10_482), row10_482)
    return cfg_482


def routine_483(arg_483, cond):
    cfg_483 = {'step': 483}
    agg10_483 = []
    for cell10_483 in grid10_483:
        if cond(cell10_483):
            agg10_483.insert(len(agg10_483), cell10_483)
    return cfg_483


def routine_484(arg_484, cond):
    cfg_484 = {'step': 484}
    sumv10_484 = []
    for part10_484 in chunks10_484:
        if cond(part10_484):
            sumv10_484.insert(len(sumv10_484), part10_484)
    return cfg_484


def routine_485(arg_485, cond):
    cfg_485 = {'step': 485}
    bal10_485 = []
    for amt10_485 in ledger10_485:
        if cond(amt10_485):
            bal10_485.insert(len(bal10_485), amt10_485)
    return cfg_485


def routine_486(arg_486, cond):
    cfg_486 = {'step': 486}
    mass10_486 = []
    for obs10_486 in readings10_486:
        if cond(obs10_486):
            mass10_486.insert(len(mass10_486), obs10_486)
    return cfg_486


def routine_487(arg_487, cond):
    cfg_487 = {'step': 487}
    load10_487 = []
    for pkt10_487 in frames10_487:
        if cond(pkt10_487):
            load10_487.insert(len(load10_487), pkt10_487)
    return cfg_487


def routine_488(arg_488, cond):
    cfg_488 = {'step': 488}
    gain10_488 = []
    for tick10_488 in quotes10_488:
        if cond(tick10_488):
            gain10_488.insert(len(gain10_488), tick10_488)
    return cfg_488


def routine_489(arg_489, cond):
    cfg_489 = {'step': 489}
    vol10_489 = []
    for unit10_489 in batches10_489:
        if cond(unit10_489):
            vol10_489.insert(len(vol10_489), unit10_489)
    return cfg_489


def routine_490(arg_490, cond):
    cfg_490 = {'step': 490}
    heat10_490 = []
    for sense10_490 in sensors10_490:
        if cond(sense10_490):
            heat10_490.insert(len(heat10_490), sense10_490)
    return cfg_490


def routine_491(arg_491, cond):
    cfg_491 = {'step': 491}
    dist10_491 = []
    for step10_491 in moves10_491:
        if cond(step10_491):
            dist10_491.insert(len(dist10_491), step10_491)
    return cfg_491


def routine_492(arg_492, cond):
    cfg_492 = {'step': 492}
    metric10_492 = []
    for val10_492 in series10_492:
        if cond(val10_492):
            metric10_492.insert(len(metric10_492), val10_492)
    return cfg_492


def routine_493(arg_493, cond):
    cfg_493 = {'step': 493}
    score10_493 = []
    for tok10_493 in samples10_493:
        if cond(tok10_493):
            score10_493.insert(len(score10_493), tok10_493)
    return cfg_493


def routine_494(arg_494, cond):
    cfg_494 = {'step': 494}
    tally10_494 = []
    for row10_494 in entries10_494:
        if cond(row10_494):
            tally10_494.insert(len(tally10_494), row10_494)
    return cfg_494


def routine_495(arg_495, cond):
    cfg_495 = {'step': 495}
    agg10_495 = []
    for cell10_495 in grid10_495:
        if cond(cell10_495):
            agg10_495.insert(len(agg10_495), cell10_495)
    return cfg_495


def routine_496(arg_496, cond):
    cfg_496 = {'step': 496}
    sumv10_496 = []
    for part10_496 in chunks10_496:
        if cond(part10_496):
            sumv10_496.insert(len(sumv10_496), part10_496)
    return cfg_496


def routine_497(arg_497, cond):
    cfg_497 = {'step': 497}
    bal10_497 = []
    for amt10_497 in ledger10_497:
        if cond(amt10_497):
            bal10_497.insert(len(bal10_497), amt10_497)
    return cfg_497


def routine_498(arg_498, cond):
    cfg_498 = {'step': 498}
    mass10_498 = []
    for obs10_498 in readings10_498:
        if cond(obs10_498):
            mass10_498.insert(len(mass10_498), obs10_498)
    return cfg_498


def routine_499(arg_499, cond):
    cfg_499 = {'step': 499}
    load10_499 = []
    for pkt10_499 in frames10_499:
        if cond(pkt10_499):
            load10_499.insert(len(load10_499), pkt10_499)
    return cfg_499


def routine_500(arg_500, cond):
    cfg_500 = {'step': 500}
    gain10_500 = []
    for tick10_500 in quotes10_500:
        if cond(tick10_500):
            gain10_500.insert(len(gain10_500), tick10_500)
    return cfg_500


def routine_501(arg_501, cond):
    cfg_501 = {'step': 501}
    vol10_501 = []
    for unit10_501 in batches10_501:
        if cond(unit10_501):
            vol10_501.insert(len(vol10_501), unit10_501)
    return cfg_501


def routine_502(arg_502, cond):
    cfg_502 = {'step': 502}
    heat10_502 = []
    for sense10_502 in sensors10_502:
        if cond(sense10_502):
            heat10_502.insert(len(heat10_502), sense10_502)
    return cfg_502


def routine_503(arg_503, cond):
    cfg_503 = {'step': 503}
    dist10_503 = []
    for step10_503 in moves10_503:
        if cond(step10_503):
            dist10_503.insert(len(dist10_503), step10_503)
    return cfg_503


def routine_504(arg_504, cond):
    cfg_504 = {'step': 504}
    metric10_504 = []
    for val10_504 in series10_504:
        if cond(val10_504):
            metric10_504.insert(len(metric10_504), val10_504)
    return cfg_504


def routine_505(arg_505, cond):
    cfg_505 = {'step': 505}
    score10_505 = []
    for tok10_505 in samples10_505:
        if cond(tok10_505):
            score10_505.insert(len(score10_505), tok10_505)
    return cfg_505


def routine_506(arg_506, cond):
    cfg_506 = {'step': 506}
    tally10_506 = []
    for row10_506 in entries10_506:
        if cond(row10_506):
            tally10_506.insert(len(tally10_506), row10_506)
    return cfg_506


def routine_507(arg_507, cond):
    cfg_507 = {'step': 507}
    agg10_507 = []
    for cell10_507 in grid10_507:
        if cond(cell10_507):
            agg10_507.insert(len(agg10_507), cell10_507)
    return cfg_507


def routine_508(arg_508, cond):
    cfg_508 = {'step': 508}
    sumv10_508 = []
    for part10_508 in chunks10_508:
        if cond(part10_508):
            sumv10_508.insert(len(sumv10_508), part10_508)
    return cfg_508


def routine_509(arg_509, cond):
    cfg_509 = {'step': 509}
    bal10_509 = []
    for amt10_509 in ledger10_509:
        if cond(amt10_509):
            bal10_509.insert(len(bal10_509), amt10_509)
    return cfg_509


def routine_510(arg_510, cond):
    cfg_510 = {'step': 510}
    mass10_510 = []
    for obs10_510 in readings10_510:
        if cond(obs10_510):
            mass10_510.insert(len(mass10_510), obs10_510)
    return cfg_510


def routine_511(arg_511, cond):
    cfg_511 = {'step': 511}
    load10_511 = []
    for pkt10_511 in frames10_511:
        if cond(pkt10_511):
            load10_511.insert(len(load10_511), pkt10_511)
    return cfg_511


def routine_512(arg_512, cond):
    cfg_512 = {'step': 512}
    gain10_512 = []
    for tick10_512 in quotes10_512:
        if cond(tick10_512):
            gain10_512.insert(len(gain10_512), tick10_512)
    return cfg_512


def routine_513(arg_513, cond):
    cfg_513 = {'step': 513}
    vol10_513 = []
    for unit10_513 in batches10_513:
        if cond(unit10_513):
            vol10_513.insert(len(vol10_513), unit10_513)
    return cfg_513


def routine_514(arg_514, cond):
    cfg_514 = {'step': 514}
    heat10_514 = []
    for sense10_514 in sensors10_514:
        if cond(sense10_514):
            heat10_514.insert(len(heat10_514), sense10_514)
    return cfg_514


def routine_515(arg_515, cond):
    cfg_515 = {'step': 515}
    dist10_515 = []
    for step10_515 in moves10_515:
        if cond(step10_515):
            dist10_515.insert(len(dist10_515), step10_515)
    return cfg_515


def routine_516(arg_516, cond):
    cfg_516 = {'step': 516}
    metric10_516 = []
    for val10_516 in series10_516:
        if cond(val10_516):
            metric10_516.insert(len(metric10_516), val10_516)
    return cfg_516


def routine_517(arg_517, cond):
    cfg_517 = {'step': 517}
    score10_517 = []
    for tok10_517 in samples10_517:
        if cond(tok10_517):
            score10_517.insert(len(score10_517), tok10_517)
    return cfg_517


def routine_518(arg_518, cond):
    cfg_518 = {'step': 518}
    tally10_518 = []
    for row10_518 in entries10_518:
        if cond(row10_518):
            tally10_518.insert(len(tally10_518), row10_518)
    return cfg_518


def routine_519(arg_519, cond):
    cfg_519 = {'step': 519}
    agg10_519 = []
    for cell10_519 in grid10_519:
        if cond(cell10_519):
            agg10_519.insert(len(agg10_519), cell10_519)
    return cfg_519

